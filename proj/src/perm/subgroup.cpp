#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>

#include "modvar/error.hpp"
#include "modvar/perm.hpp"

namespace modvar {

namespace {

std::vector<Permutation> closure_elements(std::size_t degree,
                                          std::span<Permutation const> gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> queue{Permutation(degree)};
  for (auto const& g : gens) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                            " differs from " + std::to_string(degree));
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto const& g : gens) {
      Permutation next = compose(queue[head], g);
      if (seen.insert(next).second) {
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Subgroup::Subgroup() : Subgroup(trivial(1)) {}

Subgroup::Subgroup(std::size_t degree, std::vector<Permutation> sorted_elements)
    : degree_(degree), elements_(std::move(sorted_elements)) {}

Subgroup Subgroup::trivial(std::size_t degree) {
  return Subgroup(degree, {Permutation(degree)});
}

Subgroup Subgroup::symmetric(std::size_t degree) {
  return Subgroup(degree, all_permutations(degree));
}

Subgroup Subgroup::alternating(std::size_t degree) {
  std::vector<Permutation> even;
  for (auto& p : all_permutations(degree)) {
    if (p.is_even()) {
      even.push_back(std::move(p));
    }
  }
  return Subgroup(degree, std::move(even));
}

Subgroup Subgroup::generated_by(std::size_t degree,
                                std::span<Permutation const> gens) {
  return Subgroup(degree, closure_elements(degree, gens));
}

Subgroup Subgroup::from_elements(std::size_t degree,
                                 std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !std::binary_search(elements.begin(), elements.end(),
                                              Permutation(degree))) {
    throw InvalidArgument("element list does not contain the identity");
  }
  for (auto const& a : elements) {
    if (a.degree() != degree) {
      throw InvalidArgument("element degree mismatch");
    }
    for (auto const& b : elements) {
      if (!std::binary_search(elements.begin(), elements.end(), compose(a, b))) {
        throw InvalidArgument("element list is not closed under composition");
      }
    }
  }
  return Subgroup(degree, std::move(elements));
}

bool Subgroup::contains(Permutation const& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool Subgroup::is_subgroup_of(Subgroup const& other) const {
  if (degree_ != other.degree_ || order() > other.order() ||
      other.order() % order() != 0) {
    return false;
  }
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

std::vector<Permutation> Subgroup::generators() const {
  std::vector<Permutation> gens;
  Subgroup current = trivial(degree_);
  // Prefer elements of large order so cyclic groups get one generator.
  std::vector<Permutation> candidates(elements_.begin(), elements_.end());
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](Permutation const& a, Permutation const& b) {
                     return a.order() > b.order();
                   });
  for (auto const& p : candidates) {
    if (current.order() == order()) {
      break;
    }
    if (!current.contains(p)) {
      gens.push_back(p);
      current = generated_by(degree_, gens);
    }
  }
  return gens;
}

Subgroup subgroup_closure(std::size_t degree,
                          std::span<Permutation const> gens) {
  return Subgroup::generated_by(degree, gens);
}

Subgroup intersect(Subgroup const& a, Subgroup const& b) {
  if (a.degree() != b.degree()) {
    throw InvalidArgument("cannot intersect subgroups of different degrees");
  }
  std::vector<Permutation> common;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return Subgroup::from_elements(a.degree(), std::move(common));
}

Subgroup join(Subgroup const& a, Subgroup const& b) {
  if (a.degree() != b.degree()) {
    throw InvalidArgument("cannot join subgroups of different degrees");
  }
  if (a.is_subgroup_of(b)) {
    return b;
  }
  if (b.is_subgroup_of(a)) {
    return a;
  }
  auto gens = a.generators();
  for (auto const& g : b.generators()) {
    gens.push_back(g);
  }
  return Subgroup::generated_by(a.degree(), gens);
}

Subgroup conjugate(Subgroup const& h, Permutation const& g) {
  if (h.degree() != g.degree()) {
    throw InvalidArgument("cannot conjugate: degree mismatch");
  }
  Permutation g_inv = g.inverse();
  std::vector<Permutation> image;
  image.reserve(h.order());
  for (auto const& x : h.elements()) {
    image.push_back(compose(compose(g_inv, x), g));
  }
  return Subgroup::from_elements(h.degree(), std::move(image));
}

bool subgroup_order_less(Subgroup const& a, Subgroup const& b) {
  if (a.order() != b.order()) {
    return a.order() < b.order();
  }
  return a < b;
}

namespace {

// Subsets of S_n for n <= 5 as 128-bit masks over the sorted element list.
using Mask = std::array<std::uint64_t, 2>;

bool test(Mask const& m, std::size_t i) { return (m[i / 64] >> (i % 64)) & 1U; }
void set(Mask& m, std::size_t i) { m[i / 64] |= std::uint64_t{1} << (i % 64); }

struct SymmetricTable {
  std::vector<Permutation> elements;
  std::vector<std::uint8_t> product;  // product[i * size + j] = e_i o e_j

  explicit SymmetricTable(std::size_t n) : elements(all_permutations(n)) {
    std::map<Permutation, std::uint8_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      index.emplace(elements[i], static_cast<std::uint8_t>(i));
    }
    product.resize(elements.size() * elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        product[i * elements.size() + j] =
            index.at(compose(elements[i], elements[j]));
      }
    }
  }

  // Identity is the first element in image-tuple order.
  Mask closure(std::vector<std::uint8_t> const& gens) const {
    Mask m{0, 0};
    std::vector<std::uint8_t> queue{0};
    set(m, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto g : gens) {
        auto next = product[queue[head] * elements.size() + g];
        if (!test(m, next)) {
          set(m, next);
          queue.push_back(next);
        }
      }
    }
    return m;
  }
};

}  // namespace

std::vector<Subgroup> enumerate_subgroups(std::size_t n) {
  if (n < 1 || n > 5) {
    throw InvalidArgument("enumerate_subgroups supports degrees 1..5, got " +
                          std::to_string(n));
  }
  SymmetricTable table(n);
  std::size_t const size = table.elements.size();

  // Every subgroup is reached from a cyclic subgroup by repeatedly joining
  // further cyclic subgroups, so a fixpoint over (subgroup, element) pairs
  // is complete.
  std::map<Mask, std::vector<std::uint8_t>> found;  // mask -> generators
  std::vector<Mask> frontier;
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<std::uint8_t> gens{static_cast<std::uint8_t>(i)};
    Mask m = table.closure(gens);
    if (found.emplace(m, gens).second) {
      frontier.push_back(m);
    }
  }
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (auto const& m : frontier) {
      auto const base = found.at(m);
      for (std::size_t i = 0; i < size; ++i) {
        if (test(m, i)) {
          continue;
        }
        auto gens = base;
        gens.push_back(static_cast<std::uint8_t>(i));
        Mask joined = table.closure(gens);
        if (found.emplace(joined, gens).second) {
          next.push_back(joined);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (auto const& [mask, gens] : found) {
    std::vector<Permutation> elements;
    for (std::size_t i = 0; i < size; ++i) {
      if (test(mask, i)) {
        elements.push_back(table.elements[i]);
      }
    }
    result.push_back(Subgroup::from_elements(n, std::move(elements)));
  }
  std::sort(result.begin(), result.end(), subgroup_order_less);
  return result;
}

bool is_transposition_group(Subgroup const& h) {
  if (h.order() != 2) {
    return false;
  }
  for (auto const& p : h.elements()) {
    if (!p.is_identity()) {
      auto cs = p.cycles();
      return cs.size() == 1 && cs[0].size() == 2;
    }
  }
  return false;
}

bool is_alternating(Subgroup const& h) {
  if (h.degree() < 2) {
    return false;
  }
  std::size_t half = 1;
  for (std::size_t i = 2; i <= h.degree(); ++i) {
    half *= i;
  }
  half /= 2;
  if (h.order() != half) {
    return false;
  }
  return std::all_of(h.elements().begin(), h.elements().end(),
                     [](Permutation const& p) { return p.is_even(); });
}

bool is_dihedral_over_v4(Subgroup const& h) {
  if (h.degree() != 4 || h.order() != 8) {
    return false;
  }
  // Every order-8 subgroup of S4 is a Sylow 2-subgroup, hence dihedral and
  // containing the normal V4.
  return h.is_subgroup_of(Subgroup::symmetric(4));
}

}  // namespace modvar
