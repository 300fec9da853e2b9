#include "modvar/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "modvar/error.hpp"

namespace modvar {

namespace {

using Row = std::vector<std::uint64_t>;

std::size_t highest_bit(std::uint64_t const* row, std::size_t words) {
  for (std::size_t w = words; w-- > 0;) {
    if (row[w] != 0) {
      return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(row[w]));
    }
  }
  return static_cast<std::size_t>(-1);
}

std::size_t lowest_bit(std::uint64_t const* row, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (row[w] != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
    }
  }
  return static_cast<std::size_t>(-1);
}

bool subset(std::uint64_t const* a, std::uint64_t const* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] & ~b[w]) {
      return false;
    }
  }
  return true;
}

}  // namespace

FiniteLattice FiniteLattice::from_order(std::vector<std::vector<bool>> const& leq,
                                        std::vector<std::string> labels) {
  FiniteLattice l;
  if (!labels.empty() && labels.size() != leq.size()) {
    throw InvalidArgument("label count does not match lattice size");
  }
  l.labels_ = std::move(labels);
  l.build(leq);
  return l;
}

FiniteLattice FiniteLattice::from_relation(
    std::size_t size, std::vector<std::pair<Element, Element>> const& pairs,
    std::vector<std::string> labels) {
  std::size_t const words = (size + 63) / 64;
  std::vector<Row> up(size, Row(words, 0));
  for (std::size_t a = 0; a < size; ++a) {
    up[a][a / 64] |= std::uint64_t{1} << (a % 64);
  }
  for (auto [a, b] : pairs) {
    if (a >= size || b >= size) {
      throw InvalidArgument("relation pair outside the element range");
    }
    up[a][b / 64] |= std::uint64_t{1} << (b % 64);
  }
  // Warshall over bitset rows.
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t a = 0; a < size; ++a) {
      if ((up[a][k / 64] >> (k % 64)) & 1U) {
        for (std::size_t w = 0; w < words; ++w) {
          up[a][w] |= up[k][w];
        }
      }
    }
  }
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      leq[a][b] = (up[a][b / 64] >> (b % 64)) & 1U;
    }
  }
  return from_order(leq, std::move(labels));
}

void FiniteLattice::build(std::vector<std::vector<bool>> const& leq) {
  std::size_t const m = leq.size();
  if (m == 0) {
    throw InvalidArgument("a lattice needs at least one element");
  }
  for (auto const& row : leq) {
    if (row.size() != m) {
      throw InvalidArgument("order matrix is not square");
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (!leq[a][a]) {
      throw InvalidArgument("order is not reflexive at element " +
                            std::to_string(a));
    }
    for (std::size_t b = a + 1; b < m; ++b) {
      if (leq[a][b] && leq[b][a]) {
        throw InvalidArgument("order is not antisymmetric: elements " +
                              std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }

  size_ = m;
  words_ = (m + 63) / 64;
  down_count_.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      down_count_[b] += leq[a][b] ? 1 : 0;
    }
  }
  order_.resize(m);
  std::iota(order_.begin(), order_.end(), Element{0});
  std::stable_sort(order_.begin(), order_.end(), [&](Element a, Element b) {
    return down_count_[a] < down_count_[b];
  });
  pos_.resize(m);
  for (std::size_t p = 0; p < m; ++p) {
    pos_[order_[p]] = static_cast<std::uint32_t>(p);
  }

  down_.assign(m * words_, 0);
  up_.assign(m * words_, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (leq[a][b]) {
        std::size_t pa = pos_[a];
        std::size_t pb = pos_[b];
        down_[b * words_ + pa / 64] |= std::uint64_t{1} << (pa % 64);
        up_[a * words_ + pb / 64] |= std::uint64_t{1} << (pb % 64);
      }
    }
  }
  // Transitivity: everything above b is above a whenever a <= b.
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (leq[a][b] &&
          !subset(&up_[b * words_], &up_[a * words_], words_)) {
        throw InvalidArgument("order is not transitive through elements " +
                              std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }

  meet_.assign(m * m, 0);
  join_.assign(m * m, 0);
  Row scratch(words_);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      for (std::size_t w = 0; w < words_; ++w) {
        scratch[w] = down_[a * words_ + w] & down_[b * words_ + w];
      }
      std::size_t p = highest_bit(scratch.data(), words_);
      if (p == static_cast<std::size_t>(-1) ||
          !subset(scratch.data(), &down_[order_[p] * words_], words_)) {
        throw InvalidArgument("elements " + std::to_string(a) + " and " +
                              std::to_string(b) + " have no meet");
      }
      meet_[a * m + b] = meet_[b * m + a] = order_[p];

      for (std::size_t w = 0; w < words_; ++w) {
        scratch[w] = up_[a * words_ + w] & up_[b * words_ + w];
      }
      p = lowest_bit(scratch.data(), words_);
      if (p == static_cast<std::size_t>(-1) ||
          !subset(scratch.data(), &up_[order_[p] * words_], words_)) {
        throw InvalidArgument("elements " + std::to_string(a) + " and " +
                              std::to_string(b) + " have no join");
      }
      join_[a * m + b] = join_[b * m + a] = order_[p];
    }
  }

  bottom_ = order_.front();
  top_ = order_.back();
  if (down_count_[top_] != m) {
    throw InvalidArgument("order has no top element");
  }
  if (labels_.empty()) {
    labels_.reserve(m);
    for (std::size_t a = 0; a < m; ++a) {
      labels_.push_back(std::to_string(a));
    }
  }
}

std::vector<std::pair<FiniteLattice::Element, FiniteLattice::Element>>
FiniteLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  Row between(words_);
  for (Element a = 0; a < size_; ++a) {
    for (Element b = 0; b < size_; ++b) {
      if (!less(a, b)) {
        continue;
      }
      for (std::size_t w = 0; w < words_; ++w) {
        between[w] = up_[a * words_ + w] & down_[b * words_ + w];
      }
      // The interval [a, b] contains exactly a and b iff it has two bits.
      std::size_t bits = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        bits += static_cast<std::size_t>(std::popcount(between[w]));
      }
      if (bits == 2) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

std::vector<FiniteLattice::Element> FiniteLattice::bottom_up() const {
  return order_;
}

std::vector<std::vector<bool>> FiniteLattice::order_matrix() const {
  std::vector<std::vector<bool>> out(size_, std::vector<bool>(size_, false));
  for (Element a = 0; a < size_; ++a) {
    for (Element b = 0; b < size_; ++b) {
      out[a][b] = leq(a, b);
    }
  }
  return out;
}

FiniteLattice validate(std::vector<std::vector<bool>> const& leq,
                       std::vector<std::string> labels) {
  return FiniteLattice::from_order(leq, std::move(labels));
}

bool is_modular_element(FiniteLattice const& l, FiniteLattice::Element x) {
  std::size_t const m = l.size();
  for (FiniteLattice::Element y = 0; y < m; ++y) {
    auto const xy = l.join(x, y);
    for (FiniteLattice::Element z = 0; z < m; ++z) {
      if (l.leq(y, z) && l.meet(xy, z) != l.join(l.meet(x, z), y)) {
        return false;
      }
    }
  }
  return true;
}

bool is_modular_element_via_n5(FiniteLattice const& l,
                               FiniteLattice::Element x) {
  std::size_t const m = l.size();
  for (FiniteLattice::Element a = 0; a < m; ++a) {
    auto const xa_meet = l.meet(x, a);
    auto const xa_join = l.join(x, a);
    for (FiniteLattice::Element b = 0; b < m; ++b) {
      if (l.less(a, b) && l.meet(x, b) == xa_meet && l.join(x, b) == xa_join) {
        return false;
      }
    }
  }
  return true;
}

bool is_neutral_element(FiniteLattice const& l, FiniteLattice::Element x) {
  std::size_t const m = l.size();
  for (FiniteLattice::Element y = 0; y < m; ++y) {
    for (FiniteLattice::Element z = 0; z < m; ++z) {
      auto lhs = l.meet(l.meet(l.join(x, y), l.join(y, z)), l.join(z, x));
      auto rhs = l.join(l.join(l.meet(x, y), l.meet(y, z)), l.meet(z, x));
      if (lhs != rhs) {
        return false;
      }
    }
  }
  return true;
}

std::vector<FiniteLattice::Element> modular_elements(FiniteLattice const& l) {
  std::vector<FiniteLattice::Element> out;
  for (FiniteLattice::Element x = 0; x < l.size(); ++x) {
    if (is_modular_element(l, x)) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace modvar
