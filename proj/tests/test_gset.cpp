#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "modvar/error.hpp"
#include "modvar/gset.hpp"
#include "modvar/gset_lemmas.hpp"

using namespace modvar;

namespace {

// Every partition of the points compatible with the action, by assigning
// restricted-growth labels point by point and pruning as soon as two
// assigned points and their assigned images disagree.
class CongruenceOracle {
 public:
  explicit CongruenceOracle(GSet const& a) : a_(a), label_(a.size(), npos) {}

  std::vector<Partition> run() {
    extend(0, 0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  static constexpr std::size_t npos = SIZE_MAX;

  bool consistent(std::size_t x) const {
    for (auto g : a_.generators()) {
      std::size_t const gx = a_.act(g, x);
      if (label_[gx] == npos) {
        continue;
      }
      for (std::size_t y = 0; y < a_.size(); ++y) {
        std::size_t const gy = a_.act(g, y);
        if (label_[y] == npos || label_[gy] == npos) {
          continue;
        }
        if ((label_[x] == label_[y]) != (label_[gx] == label_[gy])) {
          return false;
        }
      }
    }
    return true;
  }

  bool all_consistent(std::size_t x) const {
    // Pairs whose images only now became assigned.
    for (std::size_t y = 0; y <= x; ++y) {
      if (!consistent(y)) {
        return false;
      }
    }
    return true;
  }

  void extend(std::size_t x, std::size_t blocks) {
    if (x == a_.size()) {
      std::vector<Partition::Block> labels(label_.begin(), label_.end());
      found_.emplace_back(labels);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label_[x] = b;
      if (all_consistent(x)) {
        extend(x + 1, std::max(blocks, b + 1));
      }
    }
    label_[x] = npos;
  }

  GSet const& a_;
  std::vector<std::size_t> label_;
  std::vector<Partition> found_;
};

// Literal modular law in the congruence lattice, with meets and joins of
// partitions computed here.
Partition oracle_join(Partition const& p, Partition const& q) {
  std::vector<std::size_t> parent(p.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x];
    }
    return x;
  };
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      if (p.related(x, y) || q.related(x, y)) {
        parent[find(x)] = find(y);
      }
    }
  }
  std::vector<Partition::Block> labels(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    labels[x] = static_cast<Partition::Block>(find(x));
  }
  return Partition(labels);
}

Partition oracle_meet(Partition const& p, Partition const& q) {
  std::vector<Partition::Block> labels(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    labels[x] = static_cast<Partition::Block>(p.block_of(x) * p.size() + q.block_of(x));
  }
  return Partition(labels);
}

bool oracle_modular(std::vector<Partition> const& con, Partition const& x) {
  for (auto const& y : con) {
    for (auto const& z : con) {
      if (y.refines(z) &&
          oracle_meet(oracle_join(x, y), z) != oracle_join(oracle_meet(x, z), y)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("free G-sets") {
  auto const a = free_gset(Subgroup::symmetric(3), 2);
  CHECK(a.size() == 12);
  CHECK(a.orbit_count() == 2);
  CHECK(a.is_free());
  CHECK(a.orbit_of(7) == 1);
  CHECK(subgroups_of(Subgroup::symmetric(3)).size() == 6);
  CHECK(subgroups_of(Subgroup::alternating(4)).size() == 10);
  // The identity must act trivially.
  CHECK_THROWS_AS(GSet(Subgroup::symmetric(2), {{1, 0}, {0, 1}}), InvalidArgument);
  CHECK_NOTHROW(GSet(Subgroup::symmetric(2), {{0, 1}, {0, 1}}));
}

TEST_CASE("Con(A) matches the pruned partition oracle") {
  struct Case {
    Subgroup group;
    std::size_t orbits;
    std::size_t expected;
  };
  // One free orbit: Con is Sub(G). Two free S3-orbits: 36 simple plus 18
  // connecting congruences.
  Case const cases[] = {{Subgroup::symmetric(3), 1, 6},
                        {Subgroup::symmetric(2), 3, 0},
                        {Subgroup::symmetric(3), 2, 54},
                        {Subgroup::alternating(3), 3, 0}};
  for (auto const& c : cases) {
    auto const a = free_gset(c.group, c.orbits);
    auto const oracle = CongruenceOracle(a).run();
    if (c.expected) {
      CHECK(oracle.size() == c.expected);
    }
    auto lib = enumerate_congruences(a);
    std::sort(lib.begin(), lib.end());
    CHECK(lib == oracle);
    auto codes = enumerate_congruences_via_codes(a);
    std::sort(codes.begin(), codes.end());
    CHECK(codes == oracle);
  }
}

TEST_CASE("simple congruences and stabilizers") {
  auto const a = free_gset(Subgroup::symmetric(3), 2);
  auto const simple = enumerate_simple_congruences(a);
  CHECK(simple.size() == 36);
  for (auto const& s : simple) {
    CHECK(is_simple(a, s));
    CHECK(is_congruence(a, s));
  }
  CHECK(is_simple(a, omega(a)));
  CHECK_FALSE(is_simple(a, full_congruence(a)));
  CHECK(alpha_stabilizer(a, identity_congruence(a), 0).is_trivial());
  CHECK(alpha_stabilizer(a, omega(a), 5) == Subgroup::symmetric(3));
  CHECK(alpha_star(a, full_congruence(a)).block_count() == 1);
}

TEST_CASE("simple modularity agrees with the literal modular law") {
  auto const a = free_gset(Subgroup::symmetric(3), 2);
  auto const con = CongruenceOracle(a).run();
  std::size_t modular = 0;
  for (auto const& s : enumerate_simple_congruences(a)) {
    bool const expected = oracle_modular(con, s);
    auto const r = is_modular_simple(a, s);
    CHECK(r.modular == expected);
    CHECK(r.reason.empty() == r.modular);
    modular += expected;
  }
  CHECK(modular == 21);
  CHECK_THROWS_AS(is_modular_simple(a, full_congruence(a)), InvalidArgument);
}

TEST_CASE("codes") {
  auto const a = free_gset(Subgroup::symmetric(3), 2);
  auto const t = least_transversal(a);
  CHECK(t.points == std::vector<std::size_t>{0, 6});
  std::size_t proper = 0;
  for (auto const& code : proper_codes(a)) {
    ++proper;
    auto const c = congruence_from_code(a, t, code);
    CHECK(is_coordinated(a, c, t));
    CHECK(code_of(a, c, t) == code);
  }
  CHECK(proper == 42);
  Code const discrete{Partition::discrete(2),
                      {Subgroup::trivial(3), Subgroup::symmetric(3)}};
  Code const joined{Partition::full(2), {Subgroup::trivial(3), Subgroup::trivial(3)}};
  CHECK(to_string(discrete) == "(pi={1}{2} | T,S3)");
  CHECK(code_meet(discrete, joined).subgroups[1].is_trivial());
  auto const j = code_join(discrete, joined);
  CHECK(j.subgroups[0] == Subgroup::symmetric(3));
  CHECK(j.is_proper());
  CHECK_THROWS_AS(make_transversal(a, {0, 1}), InvalidArgument);
  CHECK(transversals_fixing_first(a).size() == 6);
}

TEST_CASE("lemma suite passes on free S3-sets with two orbits") {
  auto const a = free_gset(Subgroup::symmetric(3), 2);
  for (auto const& r : verify_gset_lemmas(a)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("lemma suite passes on a free S2-set with three orbits") {
  auto const a = free_gset(Subgroup::symmetric(2), 3);
  for (auto const& r : verify_gset_lemmas(a)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("JSON") {
  auto const a = free_gset(Subgroup::symmetric(2), 2);
  auto const j = to_json(a);
  CHECK(j.is_object());
  CHECK(to_json(omega(a)).at("classes").size() == 2);
}
