#include <algorithm>
#include <tuple>

#include "modvar/lattice.hpp"

namespace modvar {

namespace {

using Element = FiniteLattice::Element;
using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

// (down count, up count, lower covers, upper covers)
std::vector<Signature> signatures(FiniteLattice const& l) {
  std::vector<std::size_t> up(l.size(), 0), lower(l.size(), 0), upper(l.size(), 0);
  for (Element a = 0; a < l.size(); ++a) {
    for (Element b = 0; b < l.size(); ++b) {
      up[a] += l.leq(a, b) ? 1 : 0;
    }
  }
  for (auto [a, b] : l.covers()) {
    ++upper[a];
    ++lower[b];
  }
  std::vector<Signature> out;
  for (Element a = 0; a < l.size(); ++a) {
    out.emplace_back(l.down_count(a), up[a], lower[a], upper[a]);
  }
  return out;
}

class Matcher {
 public:
  Matcher(FiniteLattice const& a, FiniteLattice const& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)),
        order_(a.bottom_up()), image_(a.size()), used_(b.size(), false) {}

  bool run(std::size_t depth) {
    if (depth == order_.size()) {
      return true;
    }
    Element const x = order_[depth];
    for (Element y = 0; y < b_.size(); ++y) {
      if (used_[y] || sig_a_[x] != sig_b_[y] || !consistent(depth, x, y)) {
        continue;
      }
      image_[x] = y;
      used_[y] = true;
      if (run(depth + 1)) {
        return true;
      }
      used_[y] = false;
    }
    return false;
  }

  std::vector<Element> const& image() const { return image_; }

 private:
  bool consistent(std::size_t depth, Element x, Element y) const {
    for (std::size_t i = 0; i < depth; ++i) {
      Element const p = order_[i];
      Element const q = image_[p];
      if (a_.leq(p, x) != b_.leq(q, y) || a_.leq(x, p) != b_.leq(y, q)) {
        return false;
      }
    }
    return true;
  }

  FiniteLattice const& a_;
  FiniteLattice const& b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<Element> order_;
  std::vector<Element> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<FiniteLattice::Element>> find_isomorphism(
    FiniteLattice const& first, FiniteLattice const& second) {
  if (first.size() != second.size()) {
    return std::nullopt;
  }
  auto sa = signatures(first);
  auto sb = signatures(second);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    return std::nullopt;
  }
  Matcher m(first, second);
  if (!m.run(0)) {
    return std::nullopt;
  }
  return m.image();
}

}  // namespace modvar
