#include <algorithm>

#include "modvar/error.hpp"
#include "modvar/gset.hpp"

namespace modvar {

bool Code::is_proper() const {
  if (subgroups.size() != pi.size()) {
    return false;
  }
  for (std::size_t i = 0; i < pi.size(); ++i) {
    for (std::size_t j = i + 1; j < pi.size(); ++j) {
      if (pi.related(i, j) && subgroups[i] != subgroups[j]) {
        return false;
      }
    }
  }
  return true;
}

std::string to_string(Code const& code) {
  std::string out = "(pi=" + code.pi.to_string() + " |";
  for (std::size_t i = 0; i < code.subgroups.size(); ++i) {
    out += i == 0 ? " " : ",";
    out += describe(code.subgroups[i]);
  }
  return out + ")";
}

Code code_of(GSet const& a, Congruence const& c, Transversal const& t) {
  if (!is_coordinated(a, c, t)) {
    throw InvalidArgument("congruence is not coordinated with the transversal");
  }
  Code code{alpha_star(a, c), {}};
  for (auto x : t.points) {
    code.subgroups.push_back(alpha_stabilizer(a, c, x));
  }
  return code;
}

Congruence congruence_from_code(GSet const& a, Transversal const& t,
                                Code const& code) {
  if (!code.is_proper()) {
    throw InvalidArgument("code " + to_string(code) + " is not proper");
  }
  if (code.pi.size() != a.orbit_count() || t.points.size() != a.orbit_count()) {
    throw InvalidArgument("code and transversal must cover every orbit");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    for (std::size_t j = i + 1; j < t.points.size(); ++j) {
      if (code.pi.related(i, j)) {
        pairs.emplace_back(t.points[i], t.points[j]);
      }
    }
    for (auto const& g : code.subgroups[i].elements()) {
      pairs.emplace_back(t.points[i], a.act(a.element_index(g), t.points[i]));
    }
  }
  return generated_congruence(a, pairs);
}

bool code_leq(Code const& c1, Code const& c2) {
  if (!c1.pi.refines(c2.pi)) {
    return false;
  }
  for (std::size_t i = 0; i < c1.subgroups.size(); ++i) {
    if (!c1.subgroups[i].is_subgroup_of(c2.subgroups[i])) {
      return false;
    }
  }
  return true;
}

Code code_meet(Code const& c1, Code const& c2) {
  Code out{meet(c1.pi, c2.pi), {}};
  for (std::size_t i = 0; i < c1.subgroups.size(); ++i) {
    out.subgroups.push_back(intersect(c1.subgroups[i], c2.subgroups[i]));
  }
  return out;
}

Code code_join(Code const& c1, Code const& c2) {
  Code out{join(c1.pi, c2.pi), {}};
  std::size_t const n = c1.subgroups.size();
  for (std::size_t i = 0; i < n; ++i) {
    Subgroup k = c1.subgroups[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (out.pi.related(i, j)) {
        k = join(join(k, c1.subgroups[j]), c2.subgroups[j]);
      }
    }
    out.subgroups.push_back(std::move(k));
  }
  return out;
}

std::vector<Code> proper_codes(GSet const& a) {
  auto const subs = subgroups_of(a.group());
  std::vector<Code> out;
  for (auto const& pi : all_partitions(a.orbit_count())) {
    std::size_t const blocks = pi.block_count();
    std::vector<std::size_t> choice(blocks, 0);
    while (true) {
      Code code{pi, {}};
      for (std::size_t i = 0; i < pi.size(); ++i) {
        code.subgroups.push_back(subs[choice[pi.block_of(i)]]);
      }
      out.push_back(std::move(code));
      std::size_t b = blocks;
      while (b > 0 && choice[b - 1] + 1 == subs.size()) {
        choice[--b] = 0;
      }
      if (b == 0) {
        break;
      }
      ++choice[b - 1];
    }
  }
  return out;
}

Transversal find_common_transversal(GSet const& a, Congruence const& beta,
                                    Congruence const& gamma) {
  if (!beta.refines(gamma)) {
    throw InvalidArgument("beta must refine gamma");
  }
  Partition const beta_star = alpha_star(a, beta);
  Partition const gamma_star = alpha_star(a, gamma);
  std::size_t const n = a.orbit_count();
  std::vector<std::size_t> points(n, a.size());
  for (auto const& gclass : gamma_star.blocks()) {
    // Orbit indices follow least points, so gclass.front() holds the least point.
    std::size_t const p = a.orbits()[gclass.front()].front();
    for (auto i : gclass) {
      if (points[i] != a.size()) {
        continue;
      }
      // Least point of gamma-class(p) in orbit i; its beta-class fixes the
      // points of every orbit beta* joins to i.
      std::size_t q = a.size();
      for (auto x : a.orbits()[i]) {
        if (gamma.related(p, x)) {
          q = x;
          break;
        }
      }
      for (auto j : gclass) {
        if (!beta_star.related(i, j)) {
          continue;
        }
        for (auto x : a.orbits()[j]) {
          if (beta.related(q, x)) {
            points[j] = x;
            break;
          }
        }
      }
    }
  }
  return make_transversal(a, std::move(points));
}

}  // namespace modvar
