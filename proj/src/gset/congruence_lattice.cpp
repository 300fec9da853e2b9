#include <algorithm>
#include <set>

#include "modvar/error.hpp"
#include "modvar/gset.hpp"

namespace modvar {

std::vector<Congruence> enumerate_congruences_bruteforce(GSet const& a) {
  if (a.size() > max_bruteforce_points) {
    throw InvalidArgument("brute-force enumeration is limited to " +
                          std::to_string(max_bruteforce_points) + " points");
  }
  std::set<Congruence> principal;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      std::pair<std::size_t, std::size_t> const p{x, y};
      principal.insert(generated_congruence(a, {&p, 1}));
    }
  }
  // Every congruence is a join of principal ones.
  std::set<Congruence> all{identity_congruence(a)};
  std::vector<Congruence> frontier{identity_congruence(a)};
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (auto const& c : frontier) {
      for (auto const& p : principal) {
        Congruence j = join(c, p);
        if (all.insert(j).second) {
          next.push_back(std::move(j));
        }
      }
    }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

std::vector<Congruence> enumerate_congruences_via_codes(GSet const& a) {
  if (!a.is_free()) {
    throw InvalidArgument("code enumeration needs a free G-set");
  }
  auto const codes = proper_codes(a);
  std::set<Congruence> all;
  for (auto const& t : transversals_fixing_first(a)) {
    for (auto const& code : codes) {
      all.insert(congruence_from_code(a, t, code));
    }
  }
  return {all.begin(), all.end()};
}

std::vector<Congruence> enumerate_congruences(GSet const& a) {
  if (a.size() <= max_bruteforce_points) {
    return enumerate_congruences_bruteforce(a);
  }
  return enumerate_congruences_via_codes(a);
}

CongruenceLattice materialize(std::vector<Congruence> congruences) {
  std::sort(congruences.begin(), congruences.end());
  congruences.erase(std::unique(congruences.begin(), congruences.end()),
                    congruences.end());
  std::size_t const m = congruences.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(congruences[i].to_string());
    for (std::size_t j = 0; j < m; ++j) {
      leq[i][j] = congruences[i].refines(congruences[j]);
    }
  }
  auto lattice = FiniteLattice::from_order(leq, std::move(labels));
  return CongruenceLattice{std::move(congruences), std::move(lattice)};
}

FiniteLattice::Element CongruenceLattice::index_of(Congruence const& c) const {
  auto it = std::lower_bound(congruences.begin(), congruences.end(), c);
  if (it == congruences.end() || *it != c) {
    throw InvalidArgument("not a congruence of this lattice: " + c.to_string());
  }
  return static_cast<FiniteLattice::Element>(it - congruences.begin());
}

}  // namespace modvar
