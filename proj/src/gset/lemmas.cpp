#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "modvar/error.hpp"
#include "modvar/gset_lemmas.hpp"

namespace modvar {

namespace {

LemmaResult pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

LemmaResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

// Calls f(i, j) over ordered pairs of [0, n), exhaustively or sampled.
// Stops early when f returns false. Returns the number of pairs visited.
std::size_t for_pairs(std::size_t n, LemmaOptions const& o,
                      std::function<bool(std::size_t, std::size_t)> const& f) {
  if (n == 0) {
    return 0;
  }
  std::size_t visited = 0;
  if (n * n <= o.exhaustive_pair_limit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ++visited;
        if (!f(i, j)) {
          return visited;
        }
      }
    }
    return visited;
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < o.sample_pairs; ++k) {
    ++visited;
    if (!f(pick(rng), pick(rng))) {
      break;
    }
  }
  return visited;
}

bool exhaustive(std::size_t n, LemmaOptions const& o) {
  return n * n <= o.exhaustive_pair_limit;
}

std::string pair_count(std::size_t visited, bool all) {
  return std::to_string(visited) + (all ? " pairs" : " sampled pairs");
}

// sigma restricted to one orbit, discrete elsewhere.
Congruence restrict_to_orbit(GSet const& a, Congruence const& sigma,
                             std::size_t orbit) {
  std::vector<Partition::Block> labels(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    labels[x] = a.orbit_of(x) == orbit
                    ? sigma.block_of(x)
                    : static_cast<Partition::Block>(a.size() + x);
  }
  return Partition(std::move(labels));
}

FiniteLattice power(FiniteLattice const& l, std::size_t n) {
  FiniteLattice out = l;
  for (std::size_t i = 1; i < n; ++i) {
    out = direct_product(out, l);
  }
  return out;
}

std::string check_map(std::string const& what, LatticeMap const& map) {
  if (map.source->size() != map.target->size()) {
    return what + ": sizes differ (" + std::to_string(map.source->size()) +
           " vs " + std::to_string(map.target->size()) + ")";
  }
  auto report = check_homomorphism(map);
  if (!report.surjective) {
    return what + ": map is not onto";
  }
  if (!report.is_homomorphism()) {
    return what + ": " + report.failed_operation + " not preserved";
  }
  return {};
}

}  // namespace

GSetContext make_context(GSet const& a) {
  GSetContext ctx{&a, enumerate_congruences(a), least_transversal(a), {}};
  for (auto const& c : ctx.congruences) {
    if (is_coordinated(a, c, ctx.transversal)) {
      ctx.coordinated.push_back(c);
    }
  }
  return ctx;
}

LemmaResult check_scon_direct_product(GSet const& a) {
  std::string const name = "simple congruences form a direct product";
  auto const simple = materialize(enumerate_simple_congruences(a));
  std::vector<CongruenceLattice> parts;
  for (auto& list : orbit_congruences(a)) {
    parts.push_back(materialize(std::move(list)));
  }
  FiniteLattice product = parts[0].lattice;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    product = direct_product(product, parts[i].lattice);
  }
  LatticeMap map{&simple.lattice, &product, {}};
  for (auto const& sigma : simple.congruences) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      index = index * parts[i].congruences.size() +
              parts[i].index_of(restrict_to_orbit(a, sigma, i));
    }
    map.assignment.push_back(static_cast<FiniteLattice::Element>(index));
  }
  if (auto err = check_map("restriction map", map); !err.empty()) {
    return fail(name, err);
  }
  std::string detail = std::to_string(simple.congruences.size()) + " =";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    detail += (i ? " x " : " ") + std::to_string(parts[i].congruences.size());
  }
  return pass(name, detail);
}

LemmaResult check_scon_sub(GSet const& a) {
  std::string const name = "simple congruences match Sub(G)^n";
  if (!a.is_free()) {
    return fail(name, "action is not free");
  }
  auto const simple = materialize(enumerate_simple_congruences(a));
  auto const subs = subgroups_of(a.group());
  FiniteLattice const sub = subgroup_lattice_of(a.group());
  FiniteLattice const target = power(sub, a.orbit_count());
  Transversal const t = least_transversal(a);
  LatticeMap map{&simple.lattice, &target, {}};
  for (auto const& sigma : simple.congruences) {
    std::size_t index = 0;
    for (auto x : t.points) {
      Subgroup const h = alpha_stabilizer(a, sigma, x);
      auto it = std::find(subs.begin(), subs.end(), h);
      index = index * subs.size() + static_cast<std::size_t>(it - subs.begin());
    }
    map.assignment.push_back(static_cast<FiniteLattice::Element>(index));
  }
  if (auto err = check_map("stabilizer map", map); !err.empty()) {
    return fail(name, err);
  }
  return pass(name, std::to_string(simple.congruences.size()) + " = " +
                        std::to_string(subs.size()) + "^" +
                        std::to_string(a.orbit_count()));
}

LemmaResult check_stab_in_transitive(GSet const& a) {
  std::string const name = "unique carrier within an orbit";
  if (!a.is_free()) {
    return fail(name, "action is not free");
  }
  std::size_t checked = 0;
  for (auto const& orbit : a.orbits()) {
    for (auto x : orbit) {
      for (auto y : orbit) {
        std::size_t carriers = 0;
        for (std::size_t g = 0; g < a.group_order(); ++g) {
          carriers += a.act(g, y) == x;
        }
        if (carriers != 1) {
          return fail(name, std::to_string(carriers) + " elements carry " +
                                std::to_string(y + 1) + " to " +
                                std::to_string(x + 1));
        }
        ++checked;
      }
    }
  }
  return pass(name, std::to_string(checked) + " point pairs");
}

LemmaResult check_con_t_lattice(GSetContext const& ctx, LemmaOptions const& o) {
  std::string const name = "coordinated congruences form a lattice";
  GSet const& a = *ctx.gset;
  auto const& cs = ctx.coordinated;
  std::string bad;
  std::size_t visited = for_pairs(cs.size(), o, [&](std::size_t i, std::size_t j) {
    for (auto const& r : {meet(cs[i], cs[j]), join(cs[i], cs[j])}) {
      if (!is_congruence(a, r) || !is_coordinated(a, r, ctx.transversal)) {
        bad = cs[i].to_string() + " and " + cs[j].to_string();
        return false;
      }
    }
    return true;
  });
  if (!bad.empty()) {
    return fail(name, "not closed: " + bad);
  }
  return pass(name, std::to_string(cs.size()) + " coordinated of " +
                        std::to_string(ctx.congruences.size()) + ", " +
                        pair_count(visited, exhaustive(cs.size(), o)));
}

LemmaResult check_coding_congruence(GSetContext const& ctx) {
  std::string const name = "codes biject with coordinated congruences";
  GSet const& a = *ctx.gset;
  for (auto const& c : ctx.coordinated) {
    Code const code = code_of(a, c, ctx.transversal);
    if (!code.is_proper()) {
      return fail(name, "improper code " + to_string(code));
    }
    if (congruence_from_code(a, ctx.transversal, code) != c) {
      return fail(name, "round trip changes " + c.to_string());
    }
  }
  std::set<Congruence> images;
  auto const codes = proper_codes(a);
  for (auto const& code : codes) {
    Congruence const c = congruence_from_code(a, ctx.transversal, code);
    if (!is_coordinated(a, c, ctx.transversal) ||
        !(code_of(a, c, ctx.transversal) == code)) {
      return fail(name, "code " + to_string(code) + " is not recovered");
    }
    images.insert(c);
  }
  if (images.size() != codes.size() || codes.size() != ctx.coordinated.size()) {
    return fail(name, std::to_string(codes.size()) + " codes but " +
                          std::to_string(ctx.coordinated.size()) +
                          " coordinated congruences");
  }
  return pass(name, std::to_string(codes.size()) + " proper codes");
}

LemmaResult check_order_on_codes(GSetContext const& ctx, LemmaOptions const& o) {
  std::string const name = "refinement matches the order on codes";
  GSet const& a = *ctx.gset;
  std::vector<Code> codes;
  for (auto const& c : ctx.coordinated) {
    codes.push_back(code_of(a, c, ctx.transversal));
  }
  auto const& cs = ctx.coordinated;
  std::string bad;
  std::size_t visited = for_pairs(cs.size(), o, [&](std::size_t i, std::size_t j) {
    if (cs[i].refines(cs[j]) != code_leq(codes[i], codes[j])) {
      bad = to_string(codes[i]) + " vs " + to_string(codes[j]);
      return false;
    }
    return true;
  });
  if (!bad.empty()) {
    return fail(name, "mismatch: " + bad);
  }
  return pass(name, pair_count(visited, exhaustive(cs.size(), o)));
}

LemmaResult check_meet_join_codes(GSetContext const& ctx, LemmaOptions const& o) {
  std::string const name = "meet and join computed on codes";
  GSet const& a = *ctx.gset;
  std::vector<Code> codes;
  for (auto const& c : ctx.coordinated) {
    codes.push_back(code_of(a, c, ctx.transversal));
  }
  auto const& cs = ctx.coordinated;
  std::string bad;
  std::size_t visited = for_pairs(cs.size(), o, [&](std::size_t i, std::size_t j) {
    if (!(code_of(a, meet(cs[i], cs[j]), ctx.transversal) ==
          code_meet(codes[i], codes[j]))) {
      bad = "meet of " + to_string(codes[i]) + " and " + to_string(codes[j]);
      return false;
    }
    if (!(code_of(a, join(cs[i], cs[j]), ctx.transversal) ==
          code_join(codes[i], codes[j]))) {
      bad = "join of " + to_string(codes[i]) + " and " + to_string(codes[j]);
      return false;
    }
    return true;
  });
  if (!bad.empty()) {
    return fail(name, "mismatch: " + bad);
  }
  return pass(name, pair_count(visited, exhaustive(cs.size(), o)));
}

LemmaResult check_stabilizers_conjugated(GSetContext const& ctx,
                                         LemmaOptions const& o) {
  std::string const name = "stabilizers along an orbit are conjugate";
  GSet const& a = *ctx.gset;
  auto const& cs = ctx.congruences;
  std::vector<std::size_t> picks(cs.size());
  for (std::size_t i = 0; i < picks.size(); ++i) {
    picks[i] = i;
  }
  std::size_t const limit = std::max<std::size_t>(1, o.sample_pairs / 20);
  if (picks.size() > limit) {
    std::mt19937_64 rng(o.seed);
    std::shuffle(picks.begin(), picks.end(), rng);
    picks.resize(limit);
  }
  std::size_t checked = 0;
  for (auto i : picks) {
    for (auto const& orbit : a.orbits()) {
      std::size_t const x = orbit.front();
      Subgroup const hx = alpha_stabilizer(a, cs[i], x);
      for (std::size_t g = 0; g < a.group_order(); ++g) {
        Subgroup const hy = alpha_stabilizer(a, cs[i], a.act(g, x));
        // H_{g(x)} = g H_x g^-1.
        if (conjugate(hy, a.group().elements()[g]) != hx) {
          return fail(name, "at point " + std::to_string(x + 1) + " in " +
                                cs[i].to_string());
        }
        ++checked;
      }
    }
  }
  return pass(name, std::to_string(checked) + " point checks over " +
                        std::to_string(picks.size()) + " congruences");
}

LemmaResult check_simple_modularity(GSet const& a, CongruenceLattice const& con,
                                    bool sample) {
  std::string const name = "simple modularity conditions match Con(A)";
  std::vector<Congruence> targets;
  if (!sample) {
    targets = enumerate_simple_congruences(a);
  } else {
    auto const subs = subgroups_of(a.group());
    std::vector<Subgroup> reps;
    for (auto const& h : subs) {
      bool seen = false;
      for (auto const& r : reps) {
        for (auto const& g : a.group().elements()) {
          if (conjugate(r, g) == h) {
            seen = true;
            break;
          }
        }
        if (seen) {
          break;
        }
      }
      if (!seen) {
        reps.push_back(h);
      }
    }
    Transversal const t = least_transversal(a);
    std::vector<std::size_t> choice(a.orbit_count(), 0);
    while (true) {
      Code code{Partition::discrete(a.orbit_count()), {}};
      for (auto c : choice) {
        code.subgroups.push_back(reps[c]);
      }
      targets.push_back(congruence_from_code(a, t, code));
      std::size_t i = choice.size();
      while (i > 0 && choice[i - 1] + 1 == reps.size()) {
        choice[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++choice[i - 1];
    }
  }
  std::size_t modular = 0;
  for (auto const& sigma : targets) {
    bool const by_conditions = is_modular_simple(a, sigma).modular;
    bool const by_definition = is_modular_element(con.lattice, con.index_of(sigma));
    if (by_conditions != by_definition) {
      return fail(name, "disagree on " + sigma.to_string() + ": conditions say " +
                            (by_conditions ? "modular" : "not modular"));
    }
    modular += by_definition;
  }
  return pass(name, std::to_string(targets.size()) +
                        (sample ? " sampled" : "") + " simple congruences, " +
                        std::to_string(modular) + " modular");
}

LemmaResult check_m3_pentagon(GSet const& a, CongruenceLattice const& con) {
  std::string const name = "pentagon around (discrete | T12, T13)";
  if (a.group() != Subgroup::symmetric(3) || a.orbit_count() != 2 || !a.is_free()) {
    return fail(name, "needs a free S3-set with two orbits");
  }
  Transversal const t = least_transversal(a);
  Partition const discrete = Partition::discrete(2);
  Partition const total = Partition::full(2);
  auto sub = [](char const* n) { return named_subgroup(n, 3); };
  Congruence const alpha =
      congruence_from_code(a, t, Code{discrete, {sub("T12"), sub("T13")}});
  Congruence const beta = congruence_from_code(a, t, Code{total, {sub("T"), sub("T")}});
  Congruence const gamma =
      congruence_from_code(a, t, Code{total, {sub("T23"), sub("T23")}});
  Congruence const bottom = meet(alpha, gamma);
  Congruence const top = join(alpha, beta);

  Code const expect_top{total, {sub("S3"), sub("S3")}};
  Code const expect_bottom{discrete, {sub("T"), sub("T")}};
  if (!(code_of(a, top, t) == expect_top)) {
    return fail(name, "alpha v beta has code " + to_string(code_of(a, top, t)));
  }
  if (!(code_of(a, bottom, t) == expect_bottom)) {
    return fail(name, "alpha ^ gamma has code " + to_string(code_of(a, bottom, t)));
  }
  Embedding const e{con.index_of(bottom), con.index_of(beta), con.index_of(gamma),
                    con.index_of(alpha), con.index_of(top)};
  if (!is_sublattice(con.lattice, SublatticePattern::N5, e)) {
    return fail(name, "the five congruences do not form a pentagon");
  }
  if (is_modular_element(con.lattice, e[3])) {
    return fail(name, "alpha tests as modular");
  }
  return pass(name, "alpha v beta = " + to_string(expect_top) +
                        ", alpha ^ gamma = " + to_string(expect_bottom));
}

std::vector<LemmaResult> verify_gset_lemmas(GSet const& a, LemmaOptions const& o,
                                            std::size_t max_materialized) {
  std::vector<LemmaResult> out;
  out.push_back(check_scon_direct_product(a));
  if (!a.is_free()) {
    return out;
  }
  out.push_back(check_scon_sub(a));
  out.push_back(check_stab_in_transitive(a));
  GSetContext const ctx = make_context(a);
  out.push_back(check_con_t_lattice(ctx, o));
  out.push_back(check_coding_congruence(ctx));
  out.push_back(check_order_on_codes(ctx, o));
  out.push_back(check_meet_join_codes(ctx, o));
  out.push_back(check_stabilizers_conjugated(ctx, o));

  std::size_t const n = a.group().degree();
  bool const symmetric = n <= 5 && a.group() == Subgroup::symmetric(n);
  if (!symmetric || ctx.congruences.size() > max_materialized) {
    return out;
  }
  CongruenceLattice const con = materialize(ctx.congruences);
  out.push_back(check_simple_modularity(a, con, a.size() > max_bruteforce_points));
  if (n == 3 && a.orbit_count() == 2) {
    out.push_back(check_m3_pentagon(a, con));
  }
  return out;
}

}  // namespace modvar
