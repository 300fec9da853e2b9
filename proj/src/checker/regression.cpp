#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "modvar/checker.hpp"
#include "modvar/error.hpp"
#include "modvar/gset_lemmas.hpp"
#include "modvar/lattice.hpp"
#include "modvar/subgroup_lattice.hpp"

namespace modvar {

namespace {

using Edge = std::pair<char const*, char const*>;

// Hasse diagram of Sub(S3) as drawn.
constexpr Edge fig_s3[] = {
    {"T", "T12"},  {"T12", "S3"},  {"T13", "S3"}, {"T", "T13"},
    {"T", "T23"},  {"T23", "S3"},  {"C123", "S3"}, {"T", "C123"},
};

// Hasse diagram of Sub(S4) as drawn, by node identifier.
constexpr Edge fig_s4[] = {
    {"T", "T34"},         {"T34", "Stab1"},     {"Stab1", "S4"},
    {"T34", "Stab2"},     {"T", "T24"},         {"T24", "Stab1"},
    {"T24", "Stab3"},     {"T", "T23"},         {"T23", "Stab1"},
    {"T23", "Stab4"},     {"T", "T12"},         {"T12", "Stab3"},
    {"Stab3", "S4"},      {"T12", "Stab4"},     {"Stab4", "S4"},
    {"T", "T13"},         {"T13", "Stab2"},     {"Stab2", "S4"},
    {"T13", "Stab4"},     {"T", "T14"},         {"T14", "Stab2"},
    {"T14", "Stab3"},     {"T", "P1234"},       {"P1234", "V4"},
    {"V4", "A4"},         {"A4", "S4"},         {"T", "P1324"},
    {"P1324", "V4"},      {"T", "P1423"},       {"P1423", "V4"},
    {"V4", "I1324"},      {"V4", "I1234"},      {"V4", "I1423"},
    {"P1234", "C1234"},   {"C1234", "I1234"},   {"I1234", "S4"},
    {"P1324", "C1324"},   {"C1324", "I1324"},   {"I1324", "S4"},
    {"P1423", "C1423"},   {"C1423", "I1423"},   {"I1423", "S4"},
    {"T", "C234"},        {"C234", "Stab1"},    {"C234", "A4"},
    {"T", "C134"},        {"C134", "Stab2"},    {"C134", "A4"},
    {"T", "C124"},        {"C124", "Stab3"},    {"C124", "A4"},
    {"T", "C123"},        {"C123", "Stab4"},    {"C123", "A4"},
    {"T34", "Point1234"}, {"Point1234", "I1234"}, {"T12", "Point1234"},
    {"P1234", "Point1234"}, {"T13", "Point1324"}, {"Point1324", "I1324"},
    {"T24", "Point1324"}, {"P1324", "Point1324"}, {"T14", "Point1423"},
    {"Point1423", "I1423"}, {"T23", "Point1423"}, {"P1423", "Point1423"},
};

// Printed labels that differ from the node identifier. The three unlabelled
// nodes are generated by two disjoint transpositions.
std::string printed_label(std::string const& id) {
  static std::map<std::string, std::string> const labels = {
      {"C1234", "C1324"}, {"C1324", "C1234"}, {"C1423", "C1243"},
      {"P1234", "P12,34"}, {"P1324", "P13,24"}, {"P1423", "P14,23"},
      {"I1234", "I12,34"}, {"I1324", "I13,24"}, {"I1423", "I14,23"},
  };
  auto it = labels.find(id);
  return it == labels.end() ? id : it->second;
}

Subgroup disjoint_pair(std::string_view digits) {
  auto t = [&](std::size_t i) {
    return Permutation::from_cycles(
        4, {{static_cast<Permutation::Point>(digits[i] - '0'),
             static_cast<Permutation::Point>(digits[i + 1] - '0')}});
  };
  std::vector<Permutation> gens{t(0), t(2)};
  return Subgroup::generated_by(4, gens);
}

// The order-8 groups over V4, or under the mutation only the order-4 part.
Subgroup dihedral(std::string_view name, bool mutate) {
  if (!mutate) {
    return named_subgroup(name, 4);
  }
  std::string digits;
  for (char ch : name) {
    if (ch >= '1' && ch <= '4') {
      digits.push_back(ch);
    }
  }
  return disjoint_pair(digits);
}

Subgroup resolve(std::string const& id, std::size_t degree, bool mutate) {
  if (id.rfind("Point", 0) == 0) {
    return disjoint_pair(std::string_view(id).substr(5));
  }
  std::string const label = printed_label(id);
  if (label[0] == 'I') {
    return dihedral(label, mutate);
  }
  return named_subgroup(label, degree);
}

// Covers of the lattice compared with the drawn edges, plus an unlabelled
// isomorphism check. Empty string on success.
std::string compare_figure(SubgroupLattice const& sub, std::span<Edge const> edges,
                           bool mutate) {
  std::map<std::string, FiniteLattice::Element> node;
  std::vector<std::pair<FiniteLattice::Element, FiniteLattice::Element>> pairs;
  std::set<std::pair<Subgroup, Subgroup>> drawn;
  for (auto [lo, hi] : edges) {
    for (char const* id : {lo, hi}) {
      node.emplace(id, static_cast<FiniteLattice::Element>(node.size()));
    }
    pairs.emplace_back(node[lo], node[hi]);
    drawn.emplace(resolve(lo, sub.degree, mutate), resolve(hi, sub.degree, mutate));
  }
  if (node.size() != sub.subgroups.size()) {
    return "figure has " + std::to_string(node.size()) + " nodes";
  }
  FiniteLattice const fig = FiniteLattice::from_relation(node.size(), pairs);
  if (!find_isomorphism(fig, sub.lattice)) {
    return "diagram is not isomorphic to the computed lattice";
  }
  std::set<std::pair<Subgroup, Subgroup>> covers;
  for (auto [lo, hi] : sub.lattice.covers()) {
    covers.emplace(sub.subgroups[lo], sub.subgroups[hi]);
  }
  if (covers != drawn) {
    for (auto const& [lo, hi] : drawn) {
      if (!covers.count({lo, hi})) {
        return "drawn edge " + describe(lo) + " - " + describe(hi) +
               " is not a cover";
      }
    }
    return "some cover is not drawn";
  }
  return {};
}

std::string modularity_tests_agree(FiniteLattice const& l) {
  for (FiniteLattice::Element x = 0; x < l.size(); ++x) {
    if (is_modular_element(l, x) != is_modular_element_via_n5(l, x)) {
      return "modularity tests disagree at " + l.label(x);
    }
  }
  return {};
}

std::set<Subgroup> modular_set(SubgroupLattice const& sub) {
  std::set<Subgroup> out;
  for (std::size_t i = 0; i < sub.subgroups.size(); ++i) {
    if (sub.modular[i]) {
      out.insert(sub.subgroups[i]);
    }
  }
  return out;
}

CriterionResult criterion(int id, std::string title,
                          std::function<std::string()> const& body) {
  CriterionResult r{id, std::move(title), false, {}};
  auto const start = std::chrono::steady_clock::now();
  try {
    std::string const err = body();
    r.passed = err.rfind("ok", 0) == 0;
    r.detail = r.passed ? err.substr(err.size() > 2 ? 3 : 2) : err;
  } catch (std::exception const& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  double const secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  r.detail += r.detail.empty() ? buf : std::string(" [") + buf + "]";
  return r;
}

std::string ok(std::string const& detail = {}) {
  return detail.empty() ? "ok" : "ok " + detail;
}

// Random lattice: a random set of partitions of 4 points closed under meet
// and join, ordered by refinement.
FiniteLattice random_lattice(std::mt19937_64& rng) {
  auto const all = all_partitions(4);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::set<Partition> set;
  std::size_t const seeds = 2 + rng() % 4;
  for (std::size_t i = 0; i < seeds; ++i) {
    set.insert(all[pick(rng)]);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Partition> cur(set.begin(), set.end());
    for (auto const& a : cur) {
      for (auto const& b : cur) {
        grew |= set.insert(meet(a, b)).second;
        grew |= set.insert(join(a, b)).second;
      }
    }
  }
  std::vector<Partition> elems(set.begin(), set.end());
  std::vector<std::vector<bool>> leq(elems.size(), std::vector<bool>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      leq[i][j] = elems[i].refines(elems[j]);
    }
  }
  return FiniteLattice::from_order(leq);
}

// Lattice congruence generated by (a, b): the least equivalence containing
// the pair and compatible with meet and join.
Partition lattice_congruence(FiniteLattice const& l, FiniteLattice::Element a,
                             FiniteLattice::Element b) {
  UnionFind uf(l.size());
  std::vector<std::pair<std::size_t, std::size_t>> queue{{a, b}};
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    if (!uf.unite(x, y)) {
      continue;
    }
    for (FiniteLattice::Element z = 0; z < l.size(); ++z) {
      queue.emplace_back(l.meet(static_cast<FiniteLattice::Element>(x), z),
                         l.meet(static_cast<FiniteLattice::Element>(y), z));
      queue.emplace_back(l.join(static_cast<FiniteLattice::Element>(x), z),
                         l.join(static_cast<FiniteLattice::Element>(y), z));
    }
  }
  return uf.to_partition();
}

std::string homomorphic_images(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t modular_checked = 0;
  for (std::size_t n = 0; n < count; ++n) {
    FiniteLattice const l = random_lattice(rng);
    if (l.size() < 2) {
      continue;
    }
    auto const a = static_cast<FiniteLattice::Element>(rng() % l.size());
    auto const b = static_cast<FiniteLattice::Element>(rng() % l.size());
    Partition const theta = lattice_congruence(l, a, b);
    std::size_t const k = theta.block_count();
    // Quotient order: [x] <= [y] iff x v y is in the class of y.
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (FiniteLattice::Element x = 0; x < l.size(); ++x) {
      for (FiniteLattice::Element y = 0; y < l.size(); ++y) {
        if (theta.related(l.join(x, y), y)) {
          leq[theta.block_of(x)][theta.block_of(y)] = true;
        }
      }
    }
    FiniteLattice const q = FiniteLattice::from_order(leq);
    LatticeMap map{&l, &q, {}};
    for (FiniteLattice::Element x = 0; x < l.size(); ++x) {
      map.assignment.push_back(theta.block_of(x));
    }
    auto const report = check_homomorphism(map);
    if (!report.is_homomorphism() || !report.surjective) {
      return "quotient map is not a surjective homomorphism (lattice " +
             std::to_string(n) + ")";
    }
    for (FiniteLattice::Element x = 0; x < l.size(); ++x) {
      if (is_modular_element(l, x)) {
        ++modular_checked;
        if (!is_modular_element(q, map.assignment[x])) {
          return "image of a modular element is not modular (lattice " +
                 std::to_string(n) + ")";
        }
      }
    }
  }
  return ok(std::to_string(count) + " random lattices, " +
            std::to_string(modular_checked) + " modular elements mapped");
}

// Every rule applied to every word stays inside its class (or sends it to
// 0), and every identity holds.
std::string closure_is_fixpoint(VarietyPresentation const& p) {
  ClosureTable const t = build_closure(p);
  for (auto const& id : p.identities) {
    if (!t.holds(id)) {
      return "identity " + p.to_string(id) + " does not hold";
    }
  }
  // Equations across different alphabets make both sides 0.
  std::vector<std::pair<Word, std::optional<Word>>> rules;
  for (auto const& id : p.identities) {
    if (id.rhs && id.lhs.alphabet() == id.rhs->alphabet()) {
      rules.emplace_back(id.lhs, id.rhs);
      rules.emplace_back(*id.rhs, id.lhs);
    } else {
      rules.emplace_back(id.lhs, std::nullopt);
      if (id.rhs) {
        rules.emplace_back(*id.rhs, std::nullopt);
      }
    }
  }
  for (std::size_t i = 0; i < t.word_count(); ++i) {
    auto const wid = static_cast<ClosureTable::Id>(i);
    Word const& w = t.word(wid);
    for (auto const& [source, target] : rules) {
      bool broken = false;
      auto const firsts = source.first_occurrences();
      enumerate_matches(source, w, [&](Match const& m) {
        if (!target) {
          broken = !t.zero(wid);
          return !broken;
        }
        std::vector<Letter> r(w.letters().begin(),
                              w.letters().begin() + static_cast<std::ptrdiff_t>(m.begin));
        for (auto l : target->letters()) {
          auto pos = static_cast<std::size_t>(
              std::find(firsts.begin(), firsts.end(), l) - firsts.begin());
          auto [off, len] = m.image[pos];
          r.insert(r.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(off),
                   w.letters().begin() + static_cast<std::ptrdiff_t>(off + len));
        }
        r.insert(r.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(m.end),
                 w.letters().end());
        broken = !t.are_equal(w, Word(r));
        return !broken;
      });
      if (broken) {
        return "closure not stable at " + to_string(w);
      }
    }
  }
  return {};
}

std::string word_axioms(std::size_t max_length) {
  auto const words = canonical_words(max_length);
  for (auto const& u : words) {
    if (!leq(u, u)) {
      return "leq not reflexive at " + to_string(u);
    }
    for (auto const& v : words) {
      bool const uv = leq(u, v);
      bool const vu = leq(v, u);
      WordRelation const rel = compare(u, v);
      WordRelation const expect = uv && vu   ? WordRelation::Equivalent
                                  : uv       ? WordRelation::Less
                                  : vu       ? WordRelation::Greater
                                             : WordRelation::Incomparable;
      if (rel != expect) {
        return "compare inconsistent at " + to_string(u) + ", " + to_string(v);
      }
      // Distinct canonical words are never equivalent.
      if ((u == v) != (rel == WordRelation::Equivalent)) {
        return "equivalence differs from canonical equality at " + to_string(u) +
               ", " + to_string(v);
      }
      if (!uv) {
        continue;
      }
      for (auto const& w : words) {
        if (leq(v, w) && !leq(u, w)) {
          return "leq not transitive at " + to_string(u) + ", " + to_string(v) +
                 ", " + to_string(w);
        }
      }
    }
  }
  return ok(std::to_string(words.size()) + " canonical words");
}

std::string expect_status(std::string_view text, Status want, CheckOptions const& o,
                          Verdict* out = nullptr) {
  Verdict v = verdict(parse_presentation(text), o);
  if (out) {
    *out = v;
  }
  if (v.status != want) {
    return std::string(to_string(v.status)) + " instead of " +
           std::string(to_string(want));
  }
  return {};
}

bool three_letter_transposition_pair(Witness const& w) {
  if (w.words.size() != 2 || w.stabilizers.size() != 2) {
    return false;
  }
  return w.words[0].alphabet() == w.words[1].alphabet() &&
         w.words[0].alphabet().size() == 3 &&
         compare(w.words[0], w.words[1]) == WordRelation::Incomparable &&
         is_transposition_group(w.stabilizers[0]) &&
         is_transposition_group(w.stabilizers[1]);
}

}  // namespace

std::vector<CriterionResult> verify_paper(RegressionOptions const& o) {
  std::vector<CriterionResult> out;
  bool const mut = o.mutate_dihedral;
  CheckOptions copt;
  copt.disable_condition_c = o.disable_condition_c;

  out.push_back(criterion(1, "Sub(S3): 6 subgroups, drawn diagram, all modular", [&] {
    auto const& sub = subgroup_lattice(3);
    if (sub.subgroups.size() != 6) {
      return std::to_string(sub.subgroups.size()) + " subgroups";
    }
    if (auto err = compare_figure(sub, fig_s3, mut); !err.empty()) {
      return err;
    }
    if (auto err = modularity_tests_agree(sub.lattice); !err.empty()) {
      return err;
    }
    if (modular_set(sub).size() != 6) {
      return std::string("not every subgroup is modular");
    }
    return ok("6 subgroups, 8 covers, all modular");
  }));

  out.push_back(criterion(2, "Sub(S4): 30 subgroups, drawn diagram, modular elements", [&] {
    auto const& sub = subgroup_lattice(4);
    if (sub.subgroups.size() != 30) {
      return std::to_string(sub.subgroups.size()) + " subgroups";
    }
    if (auto err = compare_figure(sub, fig_s4, mut); !err.empty()) {
      return err;
    }
    if (auto err = modularity_tests_agree(sub.lattice); !err.empty()) {
      return err;
    }
    std::set<Subgroup> want;
    for (char const* n : {"T", "V4", "A4", "S4"}) {
      want.insert(named_subgroup(n, 4));
    }
    for (char const* n : {"I12,34", "I13,24", "I14,23"}) {
      want.insert(dihedral(n, mut));
    }
    if (modular_set(sub) != want) {
      std::string got;
      for (auto const& h : modular_set(sub)) {
        got += " " + describe(h);
      }
      return "modular elements:" + got;
    }
    return ok("modular: T V4 I12,34 I13,24 I14,23 A4 S4");
  }));

  out.push_back(criterion(3, "Sub(S5): nontrivial modular subgroups are A5 and S5", [&] {
    if (o.skip_slow) {
      return ok("skipped");
    }
    auto const& sub = subgroup_lattice(5);
    std::set<Subgroup> const want{Subgroup::trivial(5), Subgroup::alternating(5),
                                  Subgroup::symmetric(5)};
    if (modular_set(sub) != want) {
      return std::to_string(modular_set(sub).size()) + " modular subgroups";
    }
    return ok(std::to_string(sub.subgroups.size()) + " subgroups; modular T A5 S5");
  }));

  out.push_back(criterion(4, "M3 sublattices of the four forbidden patterns", [&] {
    struct Case {
      std::size_t degree;
      std::vector<Subgroup> members;  // bottom, three middles, top
    };
    auto s3 = [](char const* n) { return named_subgroup(n, 3); };
    auto s4 = [](char const* n) { return named_subgroup(n, 4); };
    std::vector<Case> const cases = {
        {3, {s3("T"), s3("T12"), s3("T13"), s3("T23"), s3("S3")}},
        {3, {s3("T"), s3("T12"), s3("T13"), s3("A3"), s3("S3")}},
        {4, {s4("V4"), dihedral("I12,34", mut), dihedral("I13,24", mut),
             dihedral("I14,23", mut), s4("S4")}},
        {4, {s4("V4"), dihedral("I12,34", mut), dihedral("I13,24", mut), s4("A4"),
             s4("S4")}},
    };
    for (std::size_t c = 0; c < cases.size(); ++c) {
      auto const& sub = subgroup_lattice(cases[c].degree);
      auto const& m = cases[c].members;
      std::vector<FiniteLattice::Element> mid;
      for (std::size_t i = 1; i <= 3; ++i) {
        mid.push_back(sub.index_of(m[i]));
      }
      SublatticeQuery q{sub.index_of(m[0]), sub.index_of(m[4]), mid};
      std::sort(mid.begin(), mid.end());
      Embedding const e{q.bottom.value(), mid[0], mid[1], mid[2], q.top.value()};
      auto const found = find_all_sublattices(sub.lattice, SublatticePattern::M3, q);
      if (!is_sublattice(sub.lattice, SublatticePattern::M3, e) ||
          std::find(found.begin(), found.end(), e) == found.end()) {
        return "case " + std::string(1, static_cast<char>('a' + c)) +
               ": not an M3 sublattice";
      }
    }
    return ok("cases a-d found");
  }));

  out.push_back(criterion(5, "free S3-set, 2 orbits: code lemmas hold exhaustively", [&] {
    GSet const a = free_gset(Subgroup::symmetric(3), 2);
    std::vector<LemmaResult> rs{check_scon_direct_product(a), check_scon_sub(a)};
    GSetContext const ctx = make_context(a);
    rs.push_back(check_con_t_lattice(ctx));
    rs.push_back(check_coding_congruence(ctx));
    rs.push_back(check_order_on_codes(ctx));
    rs.push_back(check_meet_join_codes(ctx));
    for (auto const& r : rs) {
      if (!r.passed) {
        return r.name + ": " + r.detail;
      }
    }
    if (enumerate_simple_congruences(a).size() != 36) {
      return std::string("simple congruence count is not 36");
    }
    return ok("36 simple, " + std::to_string(ctx.congruences.size()) +
              " congruences, " + std::to_string(ctx.coordinated.size()) +
              " coordinated");
  }));

  out.push_back(criterion(6, "simple modularity conditions vs Con(X); pentagon instance", [&] {
    GSet const a = free_gset(Subgroup::symmetric(3), 2);
    CongruenceLattice const con = materialize(enumerate_congruences(a));
    for (auto const& r : {check_simple_modularity(a, con, false),
                          check_m3_pentagon(a, con)}) {
      if (!r.passed) {
        return r.name + ": " + r.detail;
      }
    }
    return ok("36 simple congruences agree; pentagon found");
  }));

  out.push_back(criterion(7, "V1, V2 modular; V1 ^ V2 not, by condition (c)", [&] {
    for (auto text : {examples::v1, examples::v2}) {
      if (auto err = expect_status(text, Status::Modular, copt); !err.empty()) {
        return err;
      }
    }
    VarietyPresentation const meet = variety_meet(parse_presentation(examples::v1),
                                                  parse_presentation(examples::v2));
    Verdict const v = verdict(meet, copt);
    if (v.status != Status::NotModular) {
      return "meet: " + std::string(to_string(v.status)) + " instead of NotModular";
    }
    if (!v.c.evaluated || v.c.passed || !three_letter_transposition_pair(*v.c.witness)) {
      return std::string("meet: no condition (c) witness");
    }
    return ok("witness " + display(v.c.witness->words[0]) + " | " +
              display(v.c.witness->words[1]));
  }));

  out.push_back(criterion(8, "commutative, permutational and 0-reduced families", [&] {
    if (auto err = expect_status(examples::commutative_modular, Status::Modular, copt);
        !err.empty()) {
      return "x^2 y = 0 commutative: " + err;
    }
    Verdict v;
    if (auto err = expect_status(examples::commutative_nil4, Status::NotModular, copt, &v);
        !err.empty()) {
      return "commutative nil4: " + err;
    }
    if (v.a.passed || !(v.a.witness->words == std::vector<Word>{Word{0, 0, 1}, Word{0, 1, 0}})) {
      return std::string("commutative nil4: witness is not (x x y, x y x)");
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (auto err = expect_status(examples::permut3[i], Status::Modular, copt);
          !err.empty()) {
        return "permutational system " + std::to_string(i + 1) + ": " + err;
      }
    }
    for (std::string_view text :
         {"x^2 = 0\n", "x y x = 0\nx1 x2 x3 x4 = 0\n",
          "x^2 y = 0\nx y^2 = 0\nx1 x2 x3 x4 = 0\n", "x y z x = 0\nx1 x2 x3 x4 x5 = 0\n",
          "x^3 = 0\nx y x y = 0\n"}) {
      if (auto err = expect_status(text, Status::Modular, copt); !err.empty()) {
        return "0-reduced: " + err;
      }
    }
    return ok("2 commutative, 4 permutational, 5 0-reduced");
  }));

  out.push_back(criterion(9, "property suites", [&] {
    std::vector<FiniteLattice> lattices;
    for (std::size_t n = 1; n <= (o.skip_slow ? 4u : 5u); ++n) {
      lattices.push_back(subgroup_lattice(n).lattice);
    }
    for (std::size_t k = 1; k <= 5; ++k) {
      lattices.push_back(partition_lattice(k));
      lattices.push_back(chain(k));
    }
    lattices.push_back(direct_product(partition_lattice(3), chain(3)));
    lattices.push_back(materialize(enumerate_congruences(
                                       free_gset(Subgroup::symmetric(3), 2)))
                           .lattice);
    for (auto const& l : lattices) {
      if (auto err = modularity_tests_agree(l); !err.empty()) {
        return err;
      }
    }
    if (auto r = homomorphic_images(200, 7); r.rfind("ok", 0) != 0) {
      return r;
    }
    std::size_t presentations = 0;
    for (std::string_view text :
         {"x y = y x\nx1 x2 x3 x4 = 0\n", "x^2 y z = x^2 z y\nx1 x2 x3 x4 = 0\n",
          "x y z = z y x\nx^2 = 0\nx1 x2 x3 x4 = 0\n", "x y = y x\nx^2 y = 0\nx1 x2 x3 = 0\n",
          "x y x = x^2 y\nx1 x2 x3 x4 = 0\n", "x y = z t\nx1 x2 x3 x4 = 0\n",
          "x y z = y z x\nx1 x2 x3 x4 = 0\n", "x^2 = 0\nx y x = y x y\nx1 x2 x3 x4 = 0\n"}) {
      if (auto err = closure_is_fixpoint(parse_presentation(text)); !err.empty()) {
        return err;
      }
      ++presentations;
    }
    if (auto r = word_axioms(5); r.rfind("ok", 0) != 0) {
      return r;
    }
    return ok(std::to_string(lattices.size()) + " lattices, 200 quotients, " +
              std::to_string(presentations) + " closures, words up to length 5");
  }));
  return out;
}

}  // namespace modvar
