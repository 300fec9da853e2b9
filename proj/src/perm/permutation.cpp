#include "modvar/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "modvar/error.hpp"

namespace modvar {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0 || degree > max_degree) {
    throw InvalidArgument("permutation degree must be in 1.." +
                          std::to_string(max_degree));
  }
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > max_degree) {
    throw InvalidArgument("permutation degree must be in 1.." +
                          std::to_string(max_degree));
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw InvalidArgument("image list is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<int>> const& cycles) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (auto const& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || static_cast<std::size_t>(from) > degree || to < 1 ||
          static_cast<std::size_t>(to) > degree) {
        throw InvalidArgument("cycle point " + std::to_string(from) +
                              " outside 1.." + std::to_string(degree));
      }
      if (used[from - 1]) {
        throw InvalidArgument("cycles are not disjoint at point " +
                              std::to_string(from));
      }
      used[from - 1] = true;
      result.images_[from - 1] = static_cast<Point>(to - 1);
    }
  }
  return result;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError("expected '(' in permutation", 1, i + 1);
    }
    ++i;
    std::vector<std::string> tokens;
    std::string current;
    bool closed = false;
    while (i < text.size()) {
      char c = text[i++];
      if (c == ')') {
        closed = true;
        break;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        current.push_back(c);
      } else if (c == ' ' || c == ',' || c == '\t') {
        if (!current.empty()) {
          tokens.push_back(current);
          current.clear();
        }
      } else {
        throw ParseError(std::string("unexpected character '") + c +
                             "' in permutation",
                         1, i);
      }
    }
    if (!closed) {
      throw ParseError("unterminated cycle", 1, i + 1);
    }
    if (!current.empty()) {
      tokens.push_back(current);
    }
    std::vector<int> cycle;
    if (tokens.size() == 1 && tokens[0].size() > 1) {
      // "(123)" shorthand: one digit per point.
      for (char c : tokens[0]) {
        cycle.push_back(c - '0');
      }
    } else {
      for (auto const& t : tokens) {
        cycle.push_back(std::stoi(t));
      }
    }
    if (cycle.size() > 1) {
      cycles.push_back(std::move(cycle));
    }
    skip_space();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (auto const& c : cycles()) {
    transpositions += c.size() - 1;
  }
  return transpositions % 2 == 0;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_type()) {
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Permutation::Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) {
      continue;
    }
    std::vector<Point> cycle;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) {
      continue;
    }
    std::size_t len = 0;
    for (Point p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Permutation::to_string() const {
  std::vector<std::string> names;
  names.reserve(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    names.push_back(std::to_string(i + 1));
  }
  return to_string(names);
}

std::string Permutation::to_string(std::span<std::string const> names) const {
  auto cs = cycles();
  if (cs.empty()) {
    return "()";
  }
  std::string out;
  for (auto const& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) {
        out += ' ';
      }
      out += c[k] < names.size() ? names[c[k]] : std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation compose(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw InvalidArgument("cannot compose permutations of degrees " +
                          std::to_string(p.degree()) + " and " +
                          std::to_string(q.degree()));
  }
  std::vector<Permutation::Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = p[q[i]];
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation::Point> images(n);
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  std::vector<Permutation> result;
  do {
    result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

}  // namespace modvar
