#include <algorithm>
#include <cctype>
#include <vector>

#include "modvar/error.hpp"
#include "modvar/perm.hpp"

namespace modvar {

namespace {

Permutation cycle(std::size_t degree, std::vector<int> points) {
  return Permutation::from_cycles(degree, {std::move(points)});
}

Permutation product(std::size_t degree, std::vector<int> first,
                    std::vector<int> second) {
  return Permutation::from_cycles(degree, {std::move(first), std::move(second)});
}

[[noreturn]] void bad_name(std::string_view name, std::size_t degree,
                           std::string const& why) {
  throw InvalidArgument("invalid subgroup name '" + std::string(name) +
                        "' for degree " + std::to_string(degree) + ": " + why);
}

void require_points(std::string_view name, std::size_t degree,
                    std::vector<int> const& pts, std::size_t count) {
  if (pts.size() != count) {
    bad_name(name, degree, "expected " + std::to_string(count) + " points");
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] < 1 || static_cast<std::size_t>(pts[i]) > degree) {
      bad_name(name, degree, "point out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (pts[i] == pts[j]) {
        bad_name(name, degree, "repeated point");
      }
    }
  }
}

}  // namespace

Subgroup named_subgroup(std::string_view name, std::size_t degree) {
  std::string prefix;
  std::vector<int> pts;
  std::size_t i = 0;
  while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) {
    prefix.push_back(name[i++]);
  }
  for (; i < name.size(); ++i) {
    char c = name[i];
    if (c == '_' || c == ',') {
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      bad_name(name, degree, "unexpected character");
    }
    pts.push_back(c - '0');
  }
  if (degree < 1 || degree > 9) {
    bad_name(name, degree, "degree must be in 1..9");
  }

  auto gen = [&](std::vector<Permutation> gens) {
    return Subgroup::generated_by(degree, gens);
  };

  if (prefix == "T" && pts.empty()) {
    return Subgroup::trivial(degree);
  }
  if (prefix == "S" || prefix == "A") {
    if (pts.size() != 1 && !(pts.size() == 0)) {
      bad_name(name, degree, "expected the degree after S/A");
    }
    if (pts.size() == 1 && static_cast<std::size_t>(pts[0]) != degree) {
      bad_name(name, degree, "degree does not match");
    }
    return prefix == "S" ? Subgroup::symmetric(degree)
                         : Subgroup::alternating(degree);
  }
  if (prefix == "T") {
    require_points(name, degree, pts, 2);
    return gen({cycle(degree, pts)});
  }
  if (prefix == "C") {
    if (pts.size() != 3 && pts.size() != 4) {
      bad_name(name, degree, "cycle groups take 3 or 4 points");
    }
    require_points(name, degree, pts, pts.size());
    return gen({cycle(degree, pts)});
  }
  if (prefix == "P") {
    require_points(name, degree, pts, 4);
    return gen({product(degree, {pts[0], pts[1]}, {pts[2], pts[3]})});
  }
  if (prefix == "V") {
    if (degree != 4 || !(pts.empty() || (pts.size() == 1 && pts[0] == 4))) {
      bad_name(name, degree, "V4 lives in S4");
    }
    return gen({product(4, {1, 2}, {3, 4}), product(4, {1, 3}, {2, 4})});
  }
  if (prefix == "I") {
    if (degree != 4) {
      bad_name(name, degree, "I groups live in S4");
    }
    require_points(name, degree, pts, 4);
    int i1 = pts[0], j = pts[1], s = pts[2], t = pts[3];
    return gen({cycle(4, {i1, j}), cycle(4, {s, t}), product(4, {i1, s}, {j, t})});
  }
  if (prefix == "Stab" || prefix == "PointStab") {
    require_points(name, degree, pts, 1);
    std::vector<Permutation> fixing;
    for (auto& p : all_permutations(degree)) {
      if (p[pts[0] - 1] == pts[0] - 1) {
        fixing.push_back(std::move(p));
      }
    }
    return Subgroup::from_elements(degree, std::move(fixing));
  }
  bad_name(name, degree, "unknown name");
}

namespace {

std::string digits(std::vector<Permutation::Point> const& pts) {
  std::string out;
  for (auto p : pts) {
    out += std::to_string(p + 1);
  }
  return out;
}

// Canonical spelling of a cycle group: start at the least point and take the
// lexicographically smaller of the two directions.
std::string cycle_group_name(std::vector<Permutation::Point> c) {
  std::vector<Permutation::Point> reversed{c[0]};
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    reversed.push_back(c[k]);
  }
  return "C" + digits(std::min(c, reversed));
}

}  // namespace

std::optional<std::string> subgroup_name(Subgroup const& h) {
  std::size_t const n = h.degree();
  if (h.is_trivial()) {
    return "T";
  }
  if (h == Subgroup::symmetric(n)) {
    return "S" + std::to_string(n);
  }
  if (n >= 3 && is_alternating(h)) {
    return "A" + std::to_string(n);
  }
  if (h.order() == 2 || h.order() == 3 || h.order() == 4) {
    // Cyclic groups generated by a transposition, 3-cycle, 4-cycle or a
    // double transposition.
    for (auto const& p : h.elements()) {
      if (p.order() != h.order()) {
        continue;
      }
      auto cs = p.cycles();
      if (cs.size() == 1 && cs[0].size() == 2) {
        return "T" + digits(cs[0]);
      }
      if (cs.size() == 1 && (cs[0].size() == 3 || cs[0].size() == 4)) {
        return cycle_group_name(cs[0]);
      }
      if (cs.size() == 2 && cs[0].size() == 2 && cs[1].size() == 2) {
        return "P" + digits(cs[0]) + "," + digits(cs[1]);
      }
    }
  }
  if (n == 4 && h == named_subgroup("V4", 4)) {
    return "V4";
  }
  if (n == 4 && h.order() == 8) {
    for (char const* name : {"I12,34", "I13,24", "I14,23"}) {
      if (h == named_subgroup(name, 4)) {
        return std::string(name);
      }
    }
  }
  if (n >= 4) {
    for (std::size_t i = 1; i <= n; ++i) {
      std::string name = "Stab" + std::to_string(i);
      if (h == named_subgroup(name, n)) {
        return name;
      }
    }
  }
  return std::nullopt;
}

std::string describe(Subgroup const& h) {
  if (auto name = subgroup_name(h)) {
    return *name;
  }
  std::string out = "<";
  auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += gens[i].to_string();
  }
  return out + ">";
}

}  // namespace modvar
