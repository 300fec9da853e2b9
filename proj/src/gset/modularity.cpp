#include "modvar/error.hpp"
#include "modvar/gset.hpp"
#include "modvar/subgroup_lattice.hpp"

namespace modvar {

namespace {

enum class StabKind { Other, Transposition, A3, Dihedral, A4 };

StabKind kind_of(Subgroup const& h) {
  std::size_t const n = h.degree();
  if (n == 3) {
    if (is_transposition_group(h)) {
      return StabKind::Transposition;
    }
    if (is_alternating(h)) {
      return StabKind::A3;
    }
  }
  if (n == 4) {
    if (is_dihedral_over_v4(h)) {
      return StabKind::Dihedral;
    }
    if (is_alternating(h)) {
      return StabKind::A4;
    }
  }
  return StabKind::Other;
}

char const* forbidden(StabKind x, StabKind y) {
  if (x == StabKind::Transposition && y == StabKind::Transposition) {
    return "two transposition groups";
  }
  if ((x == StabKind::Transposition && y == StabKind::A3) ||
      (x == StabKind::A3 && y == StabKind::Transposition)) {
    return "a transposition group and A3";
  }
  if (x == StabKind::Dihedral && y == StabKind::Dihedral) {
    return "two order-8 groups over V4";
  }
  if ((x == StabKind::Dihedral && y == StabKind::A4) ||
      (x == StabKind::A4 && y == StabKind::Dihedral)) {
    return "an order-8 group over V4 and A4";
  }
  return nullptr;
}

}  // namespace

SimpleModularity is_modular_simple(GSet const& a, Congruence const& sigma) {
  std::size_t const n = a.group().degree();
  if (n < 1 || n > 5 || a.group() != Subgroup::symmetric(n)) {
    throw InvalidArgument("the acting group must be S_n with n <= 5");
  }
  if (!a.is_free()) {
    throw InvalidArgument("the G-set must be free");
  }
  if (!is_congruence(a, sigma)) {
    throw InvalidArgument("not a congruence: " + sigma.to_string());
  }
  if (!is_simple(a, sigma)) {
    throw InvalidArgument("congruence is not simple: " + sigma.to_string());
  }
  auto const& sub = subgroup_lattice(n);

  // Stabilizers within one orbit are conjugate, so the least point of each
  // orbit stands for all of them.
  std::vector<Subgroup> stabs;
  for (auto const& orbit : a.orbits()) {
    stabs.push_back(alpha_stabilizer(a, sigma, orbit.front()));
  }
  for (std::size_t i = 0; i < stabs.size(); ++i) {
    if (!sub.is_modular(stabs[i])) {
      return {false, "stabilizer " + describe(stabs[i]) + " of point " +
                         std::to_string(a.orbits()[i].front() + 1) +
                         " is not modular in Sub(S" + std::to_string(n) + ")"};
    }
  }
  for (std::size_t i = 0; i < stabs.size(); ++i) {
    for (std::size_t j = i + 1; j < stabs.size(); ++j) {
      if (char const* why = forbidden(kind_of(stabs[i]), kind_of(stabs[j]))) {
        return {false, "points " + std::to_string(a.orbits()[i].front() + 1) +
                           " and " + std::to_string(a.orbits()[j].front() + 1) +
                           " have stabilizers " + describe(stabs[i]) + " and " +
                           describe(stabs[j]) + " (" + why + ")"};
      }
    }
  }
  return {};
}

}  // namespace modvar
