#ifndef MODVAR_GSET_HPP
#define MODVAR_GSET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "modvar/lattice.hpp"
#include "modvar/partition.hpp"
#include "modvar/perm.hpp"

namespace modvar {

// A finite set {0..N-1} with an action of a permutation group G. Group
// elements are referred to by their index in group().elements(); the action
// satisfies g.(h.x) = (g o h).x.
class GSet {
 public:
  // action[g][x] is the image of x under the g-th element of the group.
  // Throws InvalidArgument if this is not a group action.
  GSet(Subgroup group, std::vector<std::vector<std::uint32_t>> action);

  Subgroup const& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t group_order() const noexcept { return group_.order(); }
  std::uint32_t act(std::size_t g, std::size_t x) const {
    return action_[g * size_ + x];
  }
  std::size_t element_index(Permutation const& p) const;
  // Indices of a generating set of the group.
  std::vector<std::size_t> const& generators() const noexcept { return gens_; }

  std::size_t orbit_count() const noexcept { return orbits_.size(); }
  std::size_t orbit_of(std::size_t x) const { return orbit_index_[x]; }
  // Orbits ordered by least point, each sorted.
  std::vector<std::vector<std::size_t>> const& orbits() const noexcept {
    return orbits_;
  }

  // Only the identity fixes a point.
  bool is_free() const noexcept { return free_; }

 private:
  Subgroup group_;
  std::size_t size_ = 0;
  std::vector<std::uint32_t> action_;
  std::vector<std::size_t> gens_;
  std::vector<std::vector<std::size_t>> orbits_;
  std::vector<std::size_t> orbit_index_;
  bool free_ = false;
};

// k copies of the regular action: point i*|G| + j is (i, g_j) and
// g.(i, h) = (i, g o h). Point i*|G| is (i, id).
GSet free_gset(Subgroup const& group, std::size_t orbit_count);

// Subgroups of G (as subgroups of its symmetric group), sorted by order.
std::vector<Subgroup> subgroups_of(Subgroup const& group);

// Sub(G) as a lattice over subgroups_of(group), labelled by describe().
FiniteLattice subgroup_lattice_of(Subgroup const& group);

// Congruences are partitions of the points closed under the action.
using Congruence = Partition;

bool is_congruence(GSet const& a, Partition const& p);
Congruence identity_congruence(GSet const& a);
Congruence full_congruence(GSet const& a);
// Same-orbit relation.
Congruence omega(GSet const& a);
// Least congruence containing the pairs.
Congruence generated_congruence(
    GSet const& a, std::span<std::pair<std::size_t, std::size_t> const> pairs);

// Orbits i ~ j iff i == j or c relates a point of orbit i to one of orbit j.
// Transitivity is recomputed and checked; a failure throws Error.
Partition alpha_star(GSet const& a, Congruence const& c);
// Every class lies inside one orbit.
bool is_simple(GSet const& a, Congruence const& c);
// {g : x c g(x)}.
Subgroup alpha_stabilizer(GSet const& a, Congruence const& c, std::size_t x);

// Congruences of the orbit-restricted G-set, one list per orbit, as
// congruences on the whole set that are discrete off that orbit.
std::vector<std::vector<Congruence>> orbit_congruences(GSet const& a);

std::vector<Congruence> enumerate_simple_congruences(GSet const& a);

inline constexpr std::size_t max_bruteforce_points = 16;

// All of Con(A) by closing principal congruences under joins; at most
// max_bruteforce_points points.
std::vector<Congruence> enumerate_congruences_bruteforce(GSet const& a);

// All of Con(A) for a free G-set, as the union over transversals of the
// congruences built from proper codes. Sorted.
std::vector<Congruence> enumerate_congruences_via_codes(GSet const& a);

// Brute force when small enough, codes otherwise.
std::vector<Congruence> enumerate_congruences(GSet const& a);

// One point per orbit, listed in orbit order.
struct Transversal {
  std::vector<std::size_t> points;
  friend bool operator==(Transversal const&, Transversal const&) = default;
};

// Throws InvalidArgument unless points holds exactly one point per orbit.
Transversal make_transversal(GSet const& a, std::vector<std::size_t> points);
// The least point of every orbit.
Transversal least_transversal(GSet const& a);
// All transversals whose first point is the least point of orbit 0.
std::vector<Transversal> transversals_fixing_first(GSet const& a);

// c relates the transversal points of any two orbits it connects.
bool is_coordinated(GSet const& a, Congruence const& c, Transversal const& t);

// (pi | H_1, ..., H_n): pi an equivalence on orbit indices.
struct Code {
  Partition pi;
  std::vector<Subgroup> subgroups;

  // pi-related orbits carry equal subgroups.
  bool is_proper() const;
  friend bool operator==(Code const&, Code const&) = default;
};

// "(pi={1,2}{3} | S3,S3,T)" with subgroup names when recognized.
std::string to_string(Code const& code);

// Throws InvalidArgument if c is not coordinated with t.
Code code_of(GSet const& a, Congruence const& c, Transversal const& t);
// Least congruence containing the transversal pairs joined by pi and the
// pairs (x_i, g(x_i)) for g in H_i. Throws InvalidArgument for improper
// codes.
Congruence congruence_from_code(GSet const& a, Transversal const& t,
                                Code const& code);

// Componentwise order: pi1 refines pi2 and H_i <= P_i.
bool code_leq(Code const& c1, Code const& c2);
Code code_meet(Code const& c1, Code const& c2);
// K_i is the join of all H_j and P_j over the (pi1 v pi2)-class of orbit i.
Code code_join(Code const& c1, Code const& c2);

// Every proper code over a's orbits with subgroups from subgroups_of(G).
std::vector<Code> proper_codes(GSet const& a);

// A transversal coordinated with beta and gamma (beta <= gamma): for each
// gamma*-class take the gamma-class of its least point, inside it one
// beta-class per beta*-class, and in each orbit the least point of that
// beta-class. Throws InvalidArgument unless beta refines gamma.
Transversal find_common_transversal(GSet const& a, Congruence const& beta,
                                    Congruence const& gamma);

// Con(A) as an explicit lattice ordered by refinement.
struct CongruenceLattice {
  std::vector<Congruence> congruences;  // sorted
  FiniteLattice lattice;

  FiniteLattice::Element index_of(Congruence const& c) const;
};

CongruenceLattice materialize(std::vector<Congruence> congruences);

struct SimpleModularity {
  bool modular = true;
  // Empty when modular; otherwise which condition fails and where.
  std::string reason;
};

// Condition-based test for a simple congruence of a free S_n-set: every
// alpha-stabilizer is modular in Sub(S_n), and no two points from different
// orbits have stabilizers forming a forbidden pair (two transposition
// groups, a transposition group and A3, two order-8 groups over V4, or one
// of those and A4). Throws InvalidArgument when the preconditions fail.
SimpleModularity is_modular_simple(GSet const& a, Congruence const& sigma);

nlohmann::json to_json(GSet const& a);
nlohmann::json to_json(Congruence const& c);

}  // namespace modvar

#endif  // MODVAR_GSET_HPP
