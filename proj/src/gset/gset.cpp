#include <algorithm>
#include <set>

#include "modvar/error.hpp"
#include "modvar/gset.hpp"

namespace modvar {

GSet::GSet(Subgroup group, std::vector<std::vector<std::uint32_t>> action)
    : group_(std::move(group)) {
  std::size_t const order = group_.order();
  if (action.size() != order) {
    throw InvalidArgument("action table needs one row per group element");
  }
  size_ = action.empty() ? 0 : action[0].size();
  if (size_ == 0) {
    throw InvalidArgument("a G-set needs at least one point");
  }
  action_.reserve(order * size_);
  for (auto const& row : action) {
    if (row.size() != size_) {
      throw InvalidArgument("action rows differ in length");
    }
    std::vector<bool> hit(size_, false);
    for (auto y : row) {
      if (y >= size_ || hit[y]) {
        throw InvalidArgument("a group element does not act bijectively");
      }
      hit[y] = true;
    }
    action_.insert(action_.end(), row.begin(), row.end());
  }
  auto const& elems = group_.elements();
  std::size_t const id = element_index(Permutation(group_.degree()));
  for (std::size_t x = 0; x < size_; ++x) {
    if (act(id, x) != x) {
      throw InvalidArgument("the identity moves point " + std::to_string(x));
    }
  }
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      std::size_t const gh = element_index(compose(elems[g], elems[h]));
      for (std::size_t x = 0; x < size_; ++x) {
        if (act(g, act(h, x)) != act(gh, x)) {
          throw InvalidArgument("action is not compatible with composition");
        }
      }
    }
  }
  for (auto const& p : group_.generators()) {
    gens_.push_back(element_index(p));
  }

  orbit_index_.assign(size_, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < size_; ++x) {
    if (orbit_index_[x] != static_cast<std::size_t>(-1)) {
      continue;
    }
    std::vector<std::size_t> orbit{x};
    orbit_index_[x] = orbits_.size();
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (auto g : gens_) {
        std::size_t y = act(g, orbit[head]);
        if (orbit_index_[y] == static_cast<std::size_t>(-1)) {
          orbit_index_[y] = orbits_.size();
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits_.push_back(std::move(orbit));
  }

  free_ = true;
  for (std::size_t g = 0; g < order && free_; ++g) {
    if (g == id) {
      continue;
    }
    for (std::size_t x = 0; x < size_; ++x) {
      if (act(g, x) == x) {
        free_ = false;
        break;
      }
    }
  }
}

std::size_t GSet::element_index(Permutation const& p) const {
  auto const& elems = group_.elements();
  auto it = std::lower_bound(elems.begin(), elems.end(), p);
  if (it == elems.end() || *it != p) {
    throw InvalidArgument("permutation " + p.to_string() +
                          " is not in the acting group");
  }
  return static_cast<std::size_t>(it - elems.begin());
}

GSet free_gset(Subgroup const& group, std::size_t orbit_count) {
  if (orbit_count < 1) {
    throw InvalidArgument("a free G-set needs at least one orbit");
  }
  auto const& elems = group.elements();
  std::size_t const order = elems.size();
  std::vector<std::vector<std::uint32_t>> action(
      order, std::vector<std::uint32_t>(order * orbit_count));
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      auto gh = compose(elems[g], elems[h]);
      auto target = static_cast<std::uint32_t>(
          std::lower_bound(elems.begin(), elems.end(), gh) - elems.begin());
      for (std::size_t i = 0; i < orbit_count; ++i) {
        action[g][i * order + h] = static_cast<std::uint32_t>(i * order) + target;
      }
    }
  }
  return GSet(group, std::move(action));
}

std::vector<Subgroup> subgroups_of(Subgroup const& group) {
  std::vector<Subgroup> out;
  for (auto& h : enumerate_subgroups(group.degree())) {
    if (h.is_subgroup_of(group)) {
      out.push_back(std::move(h));
    }
  }
  return out;
}

FiniteLattice subgroup_lattice_of(Subgroup const& group) {
  auto const subs = subgroups_of(group);
  std::size_t const m = subs.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(describe(subs[a]));
    for (std::size_t b = 0; b < m; ++b) {
      leq[a][b] = subs[a].is_subgroup_of(subs[b]);
    }
  }
  return FiniteLattice::from_order(leq, std::move(labels));
}

bool is_congruence(GSet const& a, Partition const& p) {
  if (p.size() != a.size()) {
    return false;
  }
  for (auto g : a.generators()) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      // Points in one block map into one block: compare with the block's
      // first point.
      std::size_t const first = p.blocks()[p.block_of(x)].front();
      if (!p.related(a.act(g, x), a.act(g, first))) {
        return false;
      }
    }
  }
  return true;
}

Congruence identity_congruence(GSet const& a) {
  return Partition::discrete(a.size());
}

Congruence full_congruence(GSet const& a) { return Partition::full(a.size()); }

Congruence omega(GSet const& a) {
  std::vector<Partition::Block> labels(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    labels[x] = static_cast<Partition::Block>(a.orbit_of(x));
  }
  return Partition(std::move(labels));
}

Congruence generated_congruence(
    GSet const& a, std::span<std::pair<std::size_t, std::size_t> const> pairs) {
  UnionFind uf(a.size());
  std::vector<std::pair<std::size_t, std::size_t>> queue(pairs.begin(),
                                                         pairs.end());
  for (auto [x, y] : queue) {
    if (x >= a.size() || y >= a.size()) {
      throw InvalidArgument("pair outside the G-set");
    }
  }
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    if (uf.unite(x, y)) {
      for (auto g : a.generators()) {
        queue.emplace_back(a.act(g, x), a.act(g, y));
      }
    }
  }
  return uf.to_partition();
}

Partition alpha_star(GSet const& a, Congruence const& c) {
  std::size_t const n = a.orbit_count();
  std::vector<std::vector<bool>> connects(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    connects[i][i] = true;
  }
  for (auto const& block : c.blocks()) {
    for (auto x : block) {
      for (auto y : block) {
        connects[a.orbit_of(x)][a.orbit_of(y)] = true;
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (connects[i][j]) {
        pairs.emplace_back(i, j);
      }
    }
  }
  Partition star = Partition::generated_by(n, pairs);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (star.related(i, j) != connects[i][j]) {
        throw Error("orbit connection relation is not transitive");
      }
    }
  }
  return star;
}

bool is_simple(GSet const& a, Congruence const& c) {
  for (auto const& block : c.blocks()) {
    for (auto x : block) {
      if (a.orbit_of(x) != a.orbit_of(block.front())) {
        return false;
      }
    }
  }
  return true;
}

Subgroup alpha_stabilizer(GSet const& a, Congruence const& c, std::size_t x) {
  if (x >= a.size()) {
    throw InvalidArgument("point outside the G-set");
  }
  std::vector<Permutation> elems;
  for (std::size_t g = 0; g < a.group_order(); ++g) {
    if (c.related(x, a.act(g, x))) {
      elems.push_back(a.group().elements()[g]);
    }
  }
  return Subgroup::from_elements(a.group().degree(), std::move(elems));
}

std::vector<std::vector<Congruence>> orbit_congruences(GSet const& a) {
  auto const subs = subgroups_of(a.group());
  std::vector<std::vector<Congruence>> out;
  for (auto const& orbit : a.orbits()) {
    std::size_t const base = orbit.front();
    Subgroup const point_stab = alpha_stabilizer(a, identity_congruence(a), base);
    std::vector<Congruence> list;
    for (auto const& h : subs) {
      if (!point_stab.is_subgroup_of(h)) {
        continue;
      }
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (auto const& g : h.elements()) {
        pairs.emplace_back(base, a.act(a.element_index(g), base));
      }
      list.push_back(generated_congruence(a, pairs));
    }
    out.push_back(std::move(list));
  }
  return out;
}

std::vector<Congruence> enumerate_simple_congruences(GSet const& a) {
  auto const per_orbit = orbit_congruences(a);
  std::vector<Congruence> out;
  std::vector<std::size_t> choice(per_orbit.size(), 0);
  while (true) {
    std::vector<Partition::Block> labels(a.size());
    for (std::size_t i = 0; i < per_orbit.size(); ++i) {
      auto const& c = per_orbit[i][choice[i]];
      for (auto x : a.orbits()[i]) {
        labels[x] = static_cast<Partition::Block>(i * a.size() + c.block_of(x));
      }
    }
    out.emplace_back(std::move(labels));
    std::size_t i = per_orbit.size();
    while (i > 0 && choice[i - 1] + 1 == per_orbit[i - 1].size()) {
      choice[--i] = 0;
    }
    if (i == 0) {
      break;
    }
    ++choice[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Transversal make_transversal(GSet const& a, std::vector<std::size_t> points) {
  if (points.size() != a.orbit_count()) {
    throw InvalidArgument("a transversal needs one point per orbit");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= a.size() || a.orbit_of(points[i]) != i) {
      throw InvalidArgument("transversal point " + std::to_string(i) +
                            " is not in orbit " + std::to_string(i));
    }
  }
  return Transversal{std::move(points)};
}

Transversal least_transversal(GSet const& a) {
  std::vector<std::size_t> points;
  for (auto const& orbit : a.orbits()) {
    points.push_back(orbit.front());
  }
  return Transversal{std::move(points)};
}

std::vector<Transversal> transversals_fixing_first(GSet const& a) {
  std::vector<Transversal> out;
  auto const& orbits = a.orbits();
  std::vector<std::size_t> choice(orbits.size(), 0);
  while (true) {
    std::vector<std::size_t> points;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      points.push_back(orbits[i][choice[i]]);
    }
    out.push_back(Transversal{std::move(points)});
    std::size_t i = orbits.size();
    while (i > 1 && choice[i - 1] + 1 == orbits[i - 1].size()) {
      choice[--i] = 0;
    }
    if (i <= 1) {
      break;
    }
    ++choice[i - 1];
  }
  return out;
}

bool is_coordinated(GSet const& a, Congruence const& c, Transversal const& t) {
  Partition const star = alpha_star(a, c);
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    for (std::size_t j = i + 1; j < t.points.size(); ++j) {
      if (star.related(i, j) && !c.related(t.points[i], t.points[j])) {
        return false;
      }
    }
  }
  return true;
}

nlohmann::json to_json(GSet const& a) {
  nlohmann::json gens = nlohmann::json::array();
  for (auto g : a.generators()) {
    gens.push_back(a.group().elements()[g].to_string());
  }
  nlohmann::json orbits = nlohmann::json::array();
  for (auto const& o : a.orbits()) {
    orbits.push_back(o);
  }
  return {
      {"degree", a.group().degree()},
      {"group_order", a.group_order()},
      {"generators", gens},
      {"points", a.size()},
      {"orbit_count", a.orbit_count()},
      {"orbits", orbits},
      {"free", a.is_free()},
  };
}

nlohmann::json to_json(Congruence const& c) {
  return {{"classes", c.blocks()}};
}

}  // namespace modvar
