#include "modvar/subgroup_lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "modvar/error.hpp"

namespace modvar {

namespace {

SubgroupLattice build(std::size_t n) {
  auto subgroups = enumerate_subgroups(n);
  std::size_t const m = subgroups.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(describe(subgroups[a]));
    for (std::size_t b = 0; b < m; ++b) {
      leq[a][b] = subgroups[a].is_subgroup_of(subgroups[b]);
    }
  }
  auto lattice = FiniteLattice::from_order(leq, std::move(labels));
  std::vector<bool> modular(m);
  for (FiniteLattice::Element x = 0; x < m; ++x) {
    modular[x] = is_modular_element(lattice, x);
  }
  return SubgroupLattice{n, std::move(subgroups), std::move(lattice),
                         std::move(modular)};
}

}  // namespace

FiniteLattice::Element SubgroupLattice::index_of(Subgroup const& h) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), h,
                             subgroup_order_less);
  if (it == subgroups.end() || *it != h) {
    throw InvalidArgument("subgroup is not in Sub(S" + std::to_string(degree) +
                          ")");
  }
  return static_cast<FiniteLattice::Element>(it - subgroups.begin());
}

FiniteLattice::Element SubgroupLattice::index_of(std::string_view name) const {
  return index_of(named_subgroup(name, degree));
}

SubgroupLattice const& subgroup_lattice(std::size_t n) {
  if (n < 1 || n > 5) {
    throw InvalidArgument("subgroup lattices are available for degrees 1..5");
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<SubgroupLattice>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<SubgroupLattice>(build(n));
  }
  return *slot;
}

}  // namespace modvar
