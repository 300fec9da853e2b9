#ifndef MODVAR_SUBGROUP_LATTICE_HPP
#define MODVAR_SUBGROUP_LATTICE_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "modvar/lattice.hpp"
#include "modvar/perm.hpp"

namespace modvar {

// Sub(S_n) as an explicit lattice. Element i is subgroups[i], in the order
// produced by enumerate_subgroups.
struct SubgroupLattice {
  std::size_t degree = 0;
  std::vector<Subgroup> subgroups;
  FiniteLattice lattice;
  std::vector<bool> modular;  // modular[i]: subgroups[i] is a modular element

  FiniteLattice::Element index_of(Subgroup const& h) const;
  FiniteLattice::Element index_of(std::string_view name) const;
  bool is_modular(Subgroup const& h) const { return modular[index_of(h)]; }
};

// Built once per degree (1..5) and shared; safe to call from several threads.
SubgroupLattice const& subgroup_lattice(std::size_t n);

}  // namespace modvar

#endif  // MODVAR_SUBGROUP_LATTICE_HPP
