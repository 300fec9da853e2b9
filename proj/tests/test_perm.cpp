#include <doctest.h>

#include <algorithm>
#include <set>

#include "modvar/error.hpp"
#include "modvar/perm.hpp"

using namespace modvar;

namespace {

using ElementSet = std::vector<Permutation>;

// Closure of a generating set by repeated multiplication.
ElementSet closure(std::size_t n, std::vector<Permutation> const& gens) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> queue{Permutation(n)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const& g : gens) {
      Permutation const p = compose(g, queue[i]);
      if (seen.insert(p).second) {
        queue.push_back(p);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// Every subgroup of S_n for n <= 5 is generated by two elements.
std::set<ElementSet> two_generated(std::size_t n) {
  auto const all = all_permutations(n);
  std::set<ElementSet> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      out.insert(closure(n, {all[i], all[j]}));
    }
  }
  return out;
}

std::set<ElementSet> library_subgroups(std::size_t n) {
  std::set<ElementSet> out;
  for (auto const& h : enumerate_subgroups(n)) {
    out.insert(ElementSet(h.elements().begin(), h.elements().end()));
  }
  return out;
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  auto const p = Permutation::from_cycles(3, {{1, 2}});
  auto const q = Permutation::from_cycles(3, {{2, 3}});
  CHECK(compose(p, q) == Permutation::from_cycles(3, {{1, 2, 3}}));
  CHECK((p * q)[2] == 0);
  CHECK(compose(p, q).inverse() == compose(q, p));
}

TEST_CASE("cycle notation") {
  auto const p = Permutation::parse("(1 3)(2 4)", 4);
  CHECK(p.to_string() == "(1 3)(2 4)");
  CHECK(Permutation::parse("(123)", 3).order() == 3);
  CHECK(Permutation(4).to_string() == "()");
  CHECK(p.is_even());
  CHECK(p.cycle_type() == std::vector<std::size_t>{2, 2});
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
}

TEST_CASE("Sub(S3) matches the subset-closure oracle") {
  auto const all = all_permutations(3);
  std::set<ElementSet> oracle;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    ElementSet s;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1u) {
        s.push_back(all[i]);
      }
    }
    bool closed = std::find(s.begin(), s.end(), Permutation(3)) != s.end();
    for (auto const& a : s) {
      for (auto const& b : s) {
        closed = closed && std::find(s.begin(), s.end(), a * b) != s.end();
      }
    }
    if (closed) {
      oracle.insert(s);
    }
  }
  CHECK(oracle.size() == 6);
  CHECK(library_subgroups(3) == oracle);
}

TEST_CASE("Sub(S4) matches the two-generator oracle") {
  auto const oracle = two_generated(4);
  CHECK(oracle.size() == 30);
  CHECK(library_subgroups(4) == oracle);
}

TEST_SUITE("slow") {
  TEST_CASE("Sub(S5) matches the two-generator oracle") {
    auto const oracle = two_generated(5);
    CHECK(oracle.size() == 156);
    CHECK(library_subgroups(5) == oracle);
  }
}

TEST_CASE("subgroups are sorted bottom-up") {
  auto const subs = enumerate_subgroups(4);
  CHECK(std::is_sorted(subs.begin(), subs.end(), subgroup_order_less));
  CHECK(subs.front().is_trivial());
  CHECK(subs.back() == Subgroup::symmetric(4));
}

TEST_CASE("named subgroups") {
  CHECK(named_subgroup("I12,34", 4).order() == 8);
  CHECK(named_subgroup("I_12_34", 4) == named_subgroup("I1234", 4));
  CHECK(named_subgroup("V4", 4).order() == 4);
  CHECK(named_subgroup("Stab1", 4).order() == 6);
  CHECK(named_subgroup("PointStab1", 4) == named_subgroup("Stab1", 4));
  CHECK(named_subgroup("P12,34", 4).order() == 2);
  CHECK(subgroup_name(Subgroup::alternating(3)) == "A3");
  CHECK(subgroup_name(named_subgroup("C1324", 4)) == "C1324");
  CHECK(describe(Subgroup::trivial(3)) == "T");
  CHECK_THROWS_AS(named_subgroup("I12,34", 3), InvalidArgument);
  CHECK_THROWS_AS(named_subgroup("Q8", 4), InvalidArgument);

  // Every recognized name parses back to the same group.
  for (auto const& h : enumerate_subgroups(4)) {
    if (auto name = subgroup_name(h)) {
      CHECK(named_subgroup(*name, 4) == h);
    }
  }
}

TEST_CASE("structural classes") {
  CHECK(is_transposition_group(named_subgroup("T13", 3)));
  CHECK_FALSE(is_transposition_group(named_subgroup("P12,34", 4)));
  CHECK(is_alternating(Subgroup::alternating(4)));
  CHECK(is_dihedral_over_v4(named_subgroup("I14,23", 4)));
  CHECK_FALSE(is_dihedral_over_v4(named_subgroup("C1234", 4)));
  auto const g = Permutation::from_cycles(4, {{1, 3}});
  auto const h = conjugate(named_subgroup("I12,34", 4), g);
  CHECK(is_dihedral_over_v4(h));
  CHECK(join(named_subgroup("T12", 3), named_subgroup("T13", 3)) ==
        Subgroup::symmetric(3));
  CHECK(intersect(named_subgroup("T12", 3), named_subgroup("A3", 3)).is_trivial());
}
