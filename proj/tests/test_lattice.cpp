#include <doctest.h>

#include "modvar/error.hpp"
#include "modvar/lattice.hpp"
#include "modvar/lattice_io.hpp"
#include "modvar/partition.hpp"
#include "modvar/subgroup_lattice.hpp"

using namespace modvar;
using E = FiniteLattice::Element;

namespace {

FiniteLattice pentagon() {
  // 0 < 1 < 2 < 4, 0 < 3 < 4
  return FiniteLattice::from_relation(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

FiniteLattice diamond(std::size_t atoms) {
  std::vector<std::pair<E, E>> pairs;
  E const top = static_cast<E>(atoms + 1);
  for (E a = 1; a <= atoms; ++a) {
    pairs.push_back({0, a});
    pairs.push_back({a, top});
  }
  return FiniteLattice::from_relation(atoms + 2, pairs);
}

// Meet and join recomputed from the order matrix alone, then the modular
// law checked literally.
struct Oracle {
  std::vector<std::vector<bool>> leq;

  E bound(E a, E b, bool lower) const {
    std::size_t const n = leq.size();
    for (E c = 0; c < n; ++c) {
      bool const is_bound = lower ? leq[c][a] && leq[c][b] : leq[a][c] && leq[b][c];
      if (!is_bound) {
        continue;
      }
      bool extreme = true;
      for (E d = 0; d < n && extreme; ++d) {
        bool const other = lower ? leq[d][a] && leq[d][b] : leq[a][d] && leq[b][d];
        extreme = !other || (lower ? leq[d][c] : leq[c][d]);
      }
      if (extreme) {
        return c;
      }
    }
    throw std::logic_error("no bound");
  }

  bool modular(E x) const {
    std::size_t const n = leq.size();
    for (E y = 0; y < n; ++y) {
      for (E z = 0; z < n; ++z) {
        if (leq[y][z] && bound(bound(x, y, false), z, true) !=
                             bound(bound(x, z, true), y, false)) {
          return false;
        }
      }
    }
    return true;
  }
};

void check_modularity_tests(FiniteLattice const& l) {
  Oracle const o{l.order_matrix()};
  for (E x = 0; x < l.size(); ++x) {
    bool const expected = o.modular(x);
    CHECK(is_modular_element(l, x) == expected);
    CHECK(is_modular_element_via_n5(l, x) == expected);
    if (is_neutral_element(l, x)) {
      CHECK(expected);
    }
  }
}

}  // namespace

TEST_CASE("construction validates the order") {
  CHECK(pentagon().size() == 5);
  // Two maximal elements: no join.
  CHECK_THROWS_AS(FiniteLattice::from_relation(3, {{0, 1}, {0, 2}}), InvalidArgument);
  // A cycle is not antisymmetric.
  CHECK_THROWS_AS(FiniteLattice::from_relation(2, {{0, 1}, {1, 0}}), InvalidArgument);
  auto const c = chain(4);
  CHECK(c.meet(1, 3) == 1);
  CHECK(c.join(1, 3) == 3);
  CHECK(c.covers().size() == 3);
}

TEST_CASE("modular elements agree with the literal modular law") {
  check_modularity_tests(chain(4));
  check_modularity_tests(pentagon());
  check_modularity_tests(diamond(3));
  check_modularity_tests(partition_lattice(4));
  check_modularity_tests(direct_product(pentagon(), chain(2)));
  check_modularity_tests(subgroup_lattice(3).lattice);
  check_modularity_tests(subgroup_lattice(4).lattice);
}

TEST_CASE("pentagon: only the side element is not modular") {
  auto const l = pentagon();
  CHECK(modular_elements(l) == std::vector<E>{0, 1, 2, 4});
  auto const n5 = find_sublattice(l, SublatticePattern::N5);
  REQUIRE(n5);
  CHECK((*n5)[3] == 3);
  CHECK_FALSE(find_sublattice(l, SublatticePattern::M3));
  CHECK_FALSE(find_sublattice(diamond(3), SublatticePattern::N5));
  CHECK(find_all_sublattices(diamond(4), SublatticePattern::M3).size() == 4);
}

TEST_CASE("partition lattices have Bell-number sizes") {
  std::size_t const bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(all_partitions(k).size() == bell[k]);
  }
  CHECK(partition_lattice(4).size() == 15);
}

TEST_CASE("partition meet and join") {
  auto const a = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
  auto const b = Partition::from_blocks(4, {{1, 2}, {0}, {3}});
  CHECK(join(a, b) == Partition::from_blocks(4, {{0, 1, 2}, {3}}));
  CHECK(meet(a, b) == Partition::discrete(4));
  CHECK(a.refines(join(a, b)));
}

TEST_CASE("Sub(S3) is the diamond with four atoms") {
  CHECK(find_isomorphism(subgroup_lattice(3).lattice, diamond(4)));
  CHECK_FALSE(find_isomorphism(subgroup_lattice(3).lattice, diamond(3)));
}

TEST_CASE("homomorphism check") {
  auto const c3 = chain(3);
  auto const c2 = chain(2);
  CHECK(check_homomorphism({&c3, &c2, {0, 0, 1}}).is_homomorphism());
  auto const m3 = diamond(3);
  // Sends two atoms to different ends of a chain: their join is not kept.
  auto const r = check_homomorphism({&m3, &c2, {0, 0, 1, 0, 1}});
  CHECK_FALSE(r.is_homomorphism());
  CHECK(r.counterexample);
  CHECK_THROWS_AS(check_homomorphism({&c3, &c2, {0, 1}}), InvalidArgument);
}

TEST_CASE("ideals and products") {
  auto const l = subgroup_lattice(4);
  auto const ideal = principal_ideal(l.lattice, l.index_of("A4"));
  CHECK(ideal.size() == 10);
  CHECK(direct_product(chain(2), chain(3)).size() == 6);
}

TEST_CASE("DOT and JSON output") {
  DotOptions o;
  o.highlighted = {0};
  auto const dot = to_dot(pentagon(), o);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("peripheries=2") != std::string::npos);
  auto const j = to_json(pentagon());
  CHECK(j.at("size") == 5);
  CHECK(j.at("covers").size() == 5);
}
