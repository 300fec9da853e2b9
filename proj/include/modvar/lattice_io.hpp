#ifndef MODVAR_LATTICE_IO_HPP
#define MODVAR_LATTICE_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "modvar/lattice.hpp"

namespace modvar {

struct DotOptions {
  std::string graph_name = "lattice";
  // Elements drawn with a double border; empty means none.
  std::vector<FiniteLattice::Element> highlighted;
  // Restrict nodes to these elements (edges follow the induced order).
  std::vector<FiniteLattice::Element> only;
  // Node listing order; empty means bottom_up().
  std::vector<FiniteLattice::Element> node_order;
};

// Hasse diagram, bottom to top, nodes listed bottom-up.
std::string to_dot(FiniteLattice const& lattice, DotOptions const& options = {});

// {size, covers: [[lower, upper], ...], labels, modular_elements}
nlohmann::json to_json(FiniteLattice const& lattice);

}  // namespace modvar

#endif  // MODVAR_LATTICE_IO_HPP
