#ifndef MODVAR_PERM_HPP
#define MODVAR_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modvar {

// A bijection of {0, ..., n-1}. Text forms are 1-based cycle notation,
// "(1 2)(3 4)", with the identity printed as "()".
class Permutation {
 public:
  using Point = std::uint8_t;

  static constexpr std::size_t max_degree = 255;

  // Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  // images[i] is the image of i (0-based). Throws InvalidArgument if the
  // vector is not a bijection.
  explicit Permutation(std::vector<Point> images);

  // Cycles are 1-based, e.g. {{1, 3, 2}} for (1 3 2).
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<int>> const& cycles);

  // Parses cycle notation. Cycle entries may be separated by spaces or
  // commas, or be written as a run of single digits, "(123)".
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<Point const> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool is_even() const;
  std::size_t order() const;

  // Nontrivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  // Sorted lengths of all cycles, fixed points included.
  std::vector<std::size_t> cycle_type() const;

  std::string to_string() const;
  // Cycle notation with point i printed as names[i].
  std::string to_string(std::span<std::string const> names) const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend std::strong_ordering operator<=>(Permutation const& a,
                                          Permutation const& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

// (p o q)(i) = p(q(i)). Throws InvalidArgument on degree mismatch.
Permutation compose(Permutation const& p, Permutation const& q);

inline Permutation operator*(Permutation const& p, Permutation const& q) {
  return compose(p, q);
}

// All n! permutations of degree n in increasing image-tuple order.
std::vector<Permutation> all_permutations(std::size_t n);

// A subgroup of S_n, stored as its sorted element list.
class Subgroup {
 public:
  // The trivial group of degree 1.
  Subgroup();

  static Subgroup trivial(std::size_t degree);
  static Subgroup symmetric(std::size_t degree);
  static Subgroup alternating(std::size_t degree);

  // Smallest subgroup containing gens. An empty generator list yields the
  // trivial group.
  static Subgroup generated_by(std::size_t degree,
                               std::span<Permutation const> gens);

  // Takes an element list that is already known to be closed. Throws
  // InvalidArgument when it is not a subgroup.
  static Subgroup from_elements(std::size_t degree,
                                std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<Permutation const> elements() const noexcept { return elements_; }

  bool contains(Permutation const& p) const;
  bool is_subgroup_of(Subgroup const& other) const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  // A small generating set, chosen greedily over the sorted elements.
  std::vector<Permutation> generators() const;

  friend bool operator==(Subgroup const&, Subgroup const&) = default;
  friend std::strong_ordering operator<=>(Subgroup const& a,
                                          Subgroup const& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) {
      return c;
    }
    return a.elements_ <=> b.elements_;
  }

 private:
  Subgroup(std::size_t degree, std::vector<Permutation> sorted_elements);

  std::size_t degree_;
  std::vector<Permutation> elements_;
};

Subgroup subgroup_closure(std::size_t degree,
                          std::span<Permutation const> gens);
Subgroup intersect(Subgroup const& a, Subgroup const& b);
Subgroup join(Subgroup const& a, Subgroup const& b);

// g^-1 h g, elementwise.
Subgroup conjugate(Subgroup const& h, Permutation const& g);

// Orders subgroups bottom-up: by order, then lexicographically by elements.
bool subgroup_order_less(Subgroup const& a, Subgroup const& b);

// Every subgroup of S_n exactly once, sorted by subgroup_order_less.
// Supported for 1 <= n <= 5; n = 5 takes noticeably longer than n <= 4.
std::vector<Subgroup> enumerate_subgroups(std::size_t n);

// Named subgroups:
//   T              trivial group
//   Sn, An         symmetric and alternating group of the given degree
//   Tij            <(i j)>
//   Cijk, Cijkl    <(i j k)>, <(i j k l)>
//   Pij,kl         <(i j)(k l)>
//   V4             Klein four-group in S4
//   Iij,st         dihedral group of order 8 in S4, <(i j), (s t), (i s)(j t)>
//   Stabi          stabilizer of point i (PointStabi is accepted too)
// Separators '_' and ',' are optional, so "I12,34", "I_12_34" and "I1234"
// all name the same group. Throws InvalidArgument for an unknown name or a
// name that does not fit the degree.
Subgroup named_subgroup(std::string_view name, std::size_t degree);

// Recognizes the subgroups listed above; returns the canonical spelling
// ("T12", "C1324", "P12,34", "I13,24", ...).
std::optional<std::string> subgroup_name(Subgroup const& h);

// subgroup_name when recognized, otherwise "<(1 2),(3 4)>" from generators.
std::string describe(Subgroup const& h);

// Structural classes used by the modularity conditions. They are invariant
// under relabelling the permuted points.
bool is_transposition_group(Subgroup const& h);  // <(i j)>
bool is_alternating(Subgroup const& h);          // A_n of its own degree
bool is_dihedral_over_v4(Subgroup const& h);     // order 8 in S4

}  // namespace modvar

#endif  // MODVAR_PERM_HPP
