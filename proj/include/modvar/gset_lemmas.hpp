#ifndef MODVAR_GSET_LEMMAS_HPP
#define MODVAR_GSET_LEMMAS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "modvar/gset.hpp"

namespace modvar {

// Executable checks of the structural facts about free G-sets that the
// modularity argument relies on. Each returns a named pass/fail with a short
// detail line (counts on success, the first counterexample on failure).
struct LemmaResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct LemmaOptions {
  // Pair checks run exhaustively up to this many ordered pairs and on a
  // random sample of sample_pairs pairs above it.
  std::size_t exhaustive_pair_limit = 250000;
  std::size_t sample_pairs = 4000;
  std::uint64_t seed = 1;
};

// Con(A) with the least transversal, computed once and shared by the checks.
struct GSetContext {
  GSet const* gset = nullptr;
  std::vector<Congruence> congruences;  // all of Con(A), sorted
  Transversal transversal;
  std::vector<Congruence> coordinated;  // those coordinated with transversal
};

GSetContext make_context(GSet const& a);

LemmaResult check_scon_direct_product(GSet const& a);
LemmaResult check_scon_sub(GSet const& a);
LemmaResult check_stab_in_transitive(GSet const& a);
LemmaResult check_con_t_lattice(GSetContext const& ctx, LemmaOptions const& o = {});
LemmaResult check_coding_congruence(GSetContext const& ctx);
LemmaResult check_order_on_codes(GSetContext const& ctx, LemmaOptions const& o = {});
LemmaResult check_meet_join_codes(GSetContext const& ctx, LemmaOptions const& o = {});
LemmaResult check_stabilizers_conjugated(GSetContext const& ctx,
                                         LemmaOptions const& o = {});

// Condition-based verdict against the modular-element test in Con(A). With
// sample set, only one simple congruence per pair of stabilizer conjugacy
// classes (at the least points) is compared; otherwise every simple one.
LemmaResult check_simple_modularity(GSet const& a, CongruenceLattice const& con,
                                    bool sample);

// Free S3-set with two orbits: alpha = (discrete | T12, T13) is the side of
// the pentagon {alpha ^ gamma, beta, gamma, alpha, alpha v beta} with
// beta = (total | T, T) and gamma = (total | T23, T23).
LemmaResult check_m3_pentagon(GSet const& a, CongruenceLattice const& con);

// Everything that applies to a: the free-only checks need a free action,
// the simple-modularity check needs S_n acting, the pentagon needs S3 with
// two orbits. Con(A) is materialized when it has at most max_materialized
// elements.
std::vector<LemmaResult> verify_gset_lemmas(GSet const& a,
                                            LemmaOptions const& o = {},
                                            std::size_t max_materialized = 4000);

}  // namespace modvar

#endif  // MODVAR_GSET_LEMMAS_HPP
