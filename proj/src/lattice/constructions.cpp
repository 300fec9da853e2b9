#include <algorithm>

#include "modvar/error.hpp"
#include "modvar/lattice.hpp"
#include "modvar/partition.hpp"

namespace modvar {

FiniteLattice partition_lattice(std::size_t k) {
  if (k < 1 || k > 6) {
    throw InvalidArgument("partition_lattice supports 1 <= k <= 6, got " +
                          std::to_string(k));
  }
  auto const parts = all_partitions(k);
  std::size_t const m = parts.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(parts[a].to_string());
    for (std::size_t b = 0; b < m; ++b) {
      leq[a][b] = parts[a].refines(parts[b]);
    }
  }
  return FiniteLattice::from_order(leq, std::move(labels));
}

FiniteLattice direct_product(FiniteLattice const& first,
                             FiniteLattice const& second) {
  std::size_t const n1 = first.size();
  std::size_t const n2 = second.size();
  std::size_t const m = n1 * n2;
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    auto a1 = static_cast<FiniteLattice::Element>(a / n2);
    auto a2 = static_cast<FiniteLattice::Element>(a % n2);
    labels.push_back("(" + first.label(a1) + "," + second.label(a2) + ")");
    for (std::size_t b = 0; b < m; ++b) {
      auto b1 = static_cast<FiniteLattice::Element>(b / n2);
      auto b2 = static_cast<FiniteLattice::Element>(b % n2);
      leq[a][b] = first.leq(a1, b1) && second.leq(a2, b2);
    }
  }
  return FiniteLattice::from_order(leq, std::move(labels));
}

std::vector<FiniteLattice::Element> down_set(FiniteLattice const& lattice,
                                             FiniteLattice::Element x) {
  std::vector<FiniteLattice::Element> out;
  for (FiniteLattice::Element a = 0; a < lattice.size(); ++a) {
    if (lattice.leq(a, x)) {
      out.push_back(a);
    }
  }
  return out;
}

FiniteLattice principal_ideal(FiniteLattice const& lattice,
                              FiniteLattice::Element x) {
  if (x >= lattice.size()) {
    throw InvalidArgument("element out of range");
  }
  auto const elems = down_set(lattice, x);
  std::size_t const m = elems.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(lattice.label(elems[a]));
    for (std::size_t b = 0; b < m; ++b) {
      leq[a][b] = lattice.leq(elems[a], elems[b]);
    }
  }
  return FiniteLattice::from_order(leq, std::move(labels));
}

FiniteLattice chain(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      leq[a][b] = true;
    }
  }
  return FiniteLattice::from_order(leq);
}

HomomorphismReport check_homomorphism(LatticeMap const& map) {
  if (map.source == nullptr || map.target == nullptr) {
    throw InvalidArgument("lattice map without source or target");
  }
  auto const& src = *map.source;
  auto const& dst = *map.target;
  if (map.assignment.size() != src.size()) {
    throw InvalidArgument("assignment is not total on the source lattice");
  }
  std::vector<bool> hit(dst.size(), false);
  for (auto y : map.assignment) {
    if (y >= dst.size()) {
      throw InvalidArgument("assignment points outside the target lattice");
    }
    hit[y] = true;
  }
  HomomorphismReport report;
  report.surjective = std::find(hit.begin(), hit.end(), false) == hit.end();
  auto const& f = map.assignment;
  for (FiniteLattice::Element a = 0; a < src.size(); ++a) {
    for (FiniteLattice::Element b = 0; b < src.size(); ++b) {
      bool meet_ok = f[src.meet(a, b)] == dst.meet(f[a], f[b]);
      bool join_ok = f[src.join(a, b)] == dst.join(f[a], f[b]);
      if (!meet_ok) {
        report.meet_preserving = false;
      }
      if (!join_ok) {
        report.join_preserving = false;
      }
      if ((!meet_ok || !join_ok) && !report.counterexample) {
        report.counterexample = std::make_pair(a, b);
        report.failed_operation = meet_ok ? "join" : "meet";
      }
    }
  }
  return report;
}

}  // namespace modvar
