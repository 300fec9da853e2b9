#include <algorithm>
#include <sstream>

#include "modvar/lattice_io.hpp"

namespace modvar {

namespace {

std::string quoted(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(FiniteLattice const& lattice, DotOptions const& options) {
  auto contains = [](std::vector<FiniteLattice::Element> const& v,
                     FiniteLattice::Element x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  auto shown = [&](FiniteLattice::Element x) {
    return options.only.empty() || contains(options.only, x);
  };

  std::ostringstream out;
  out << "digraph " << quoted(options.graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  auto const nodes =
      options.node_order.empty() ? lattice.bottom_up() : options.node_order;
  for (auto x : nodes) {
    if (!shown(x)) {
      continue;
    }
    out << "  n" << x << " [label=" << quoted(lattice.label(x));
    if (contains(options.highlighted, x)) {
      out << ", peripheries=2";
    }
    out << "];\n";
  }

  std::vector<std::pair<FiniteLattice::Element, FiniteLattice::Element>> edges;
  if (options.only.empty()) {
    edges = lattice.covers();
  } else {
    // Covers of the induced suborder.
    for (auto a : options.only) {
      for (auto b : options.only) {
        if (!lattice.less(a, b)) {
          continue;
        }
        bool covered = true;
        for (auto c : options.only) {
          if (lattice.less(a, c) && lattice.less(c, b)) {
            covered = false;
            break;
          }
        }
        if (covered) {
          edges.emplace_back(a, b);
        }
      }
    }
    std::sort(edges.begin(), edges.end());
  }
  for (auto [a, b] : edges) {
    out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(FiniteLattice const& lattice) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : lattice.covers()) {
    covers.push_back({a, b});
  }
  return {
      {"size", lattice.size()},
      {"covers", covers},
      {"labels", lattice.labels()},
      {"modular_elements", modular_elements(lattice)},
  };
}

}  // namespace modvar
