#ifndef MODVAR_LATTICE_HPP
#define MODVAR_LATTICE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modvar {

// A finite lattice given by an explicit order relation. Meet and join are
// derived once at construction and stored as tables, so the object is
// immutable and cheap to query afterwards.
class FiniteLattice {
 public:
  using Element = std::uint32_t;

  // leq[a][b] is true iff a <= b. Throws InvalidArgument if the relation is
  // not a partial order or some pair lacks a unique meet or join.
  static FiniteLattice from_order(std::vector<std::vector<bool>> const& leq,
                                  std::vector<std::string> labels = {});

  // Order generated by the given (lower, upper) pairs, closed reflexively
  // and transitively before validation.
  static FiniteLattice from_relation(
      std::size_t size, std::vector<std::pair<Element, Element>> const& pairs,
      std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }
  bool leq(Element a, Element b) const {
    std::size_t const i = pos_[a];
    return (down_[b * words_ + i / 64] >> (i % 64)) & 1U;
  }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const {
    return leq(a, b) || leq(b, a);
  }
  Element meet(Element a, Element b) const { return meet_[a * size_ + b]; }
  Element join(Element a, Element b) const { return join_[a * size_ + b]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  // Number of elements below a, a included.
  std::size_t down_count(Element a) const { return down_count_[a]; }

  std::string const& label(Element a) const { return labels_[a]; }
  std::vector<std::string> const& labels() const noexcept { return labels_; }

  // Covering pairs (lower, upper), sorted.
  std::vector<std::pair<Element, Element>> covers() const;

  // Elements sorted bottom-up by down_count, ties by index.
  std::vector<Element> bottom_up() const;

  // The order as a dense matrix.
  std::vector<std::vector<bool>> order_matrix() const;

 private:
  FiniteLattice() = default;
  void build(std::vector<std::vector<bool>> const& leq);

  // Bitsets are indexed by position in a linear extension of the order
  // (sorted by down_count), so the greatest common lower bound is the
  // highest set bit of an intersection.
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<Element> order_;     // position -> element
  std::vector<std::uint32_t> pos_; // element -> position
  std::vector<std::uint64_t> down_;
  std::vector<std::uint64_t> up_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<std::size_t> down_count_;
  std::vector<std::string> labels_;
  Element bottom_ = 0;
  Element top_ = 0;
};

// Same as FiniteLattice::from_order.
FiniteLattice validate(std::vector<std::vector<bool>> const& leq,
                       std::vector<std::string> labels = {});

// (x v y) ^ z == (x ^ z) v y for all y <= z.
bool is_modular_element(FiniteLattice const& lattice, FiniteLattice::Element x);

// x is never the side element of a pentagon: there are no a < b with
// x ^ a == x ^ b and x v a == x v b.
bool is_modular_element_via_n5(FiniteLattice const& lattice,
                               FiniteLattice::Element x);

// (x v y) ^ (y v z) ^ (z v x) == (x ^ y) v (y ^ z) v (z ^ x) for all y, z.
bool is_neutral_element(FiniteLattice const& lattice, FiniteLattice::Element x);

std::vector<FiniteLattice::Element> modular_elements(FiniteLattice const& lattice);

enum class SublatticePattern { M3, N5 };

// Five elements closed under meet and join.
//   M3: {bottom, atom, atom, atom, top}, atoms in increasing index order.
//   N5: {bottom, low, high, side, top} with low < high and side the element
//       incomparable to both (the pentagon's "center").
using Embedding = std::array<FiniteLattice::Element, 5>;

struct SublatticeQuery {
  std::optional<FiniteLattice::Element> bottom;
  std::optional<FiniteLattice::Element> top;
  // Elements that must appear among the middle three.
  std::vector<FiniteLattice::Element> middle;
};

std::optional<Embedding> find_sublattice(FiniteLattice const& lattice,
                                         SublatticePattern pattern,
                                         SublatticeQuery const& query = {});
std::vector<Embedding> find_all_sublattices(FiniteLattice const& lattice,
                                            SublatticePattern pattern,
                                            SublatticeQuery const& query = {});

// True iff the five elements form a sublattice of the given shape, in the
// element order documented for Embedding.
bool is_sublattice(FiniteLattice const& lattice, SublatticePattern pattern,
                   Embedding const& e);

// All equivalence relations on {1..k} ordered by refinement; k <= 6.
FiniteLattice partition_lattice(std::size_t k);

// Componentwise order; element (i, j) has index i * second.size() + j.
FiniteLattice direct_product(FiniteLattice const& first,
                             FiniteLattice const& second);

// The down-set of x with the induced order. Element i of the result is the
// i-th element of down_set(lattice, x).
FiniteLattice principal_ideal(FiniteLattice const& lattice,
                              FiniteLattice::Element x);
std::vector<FiniteLattice::Element> down_set(FiniteLattice const& lattice,
                                             FiniteLattice::Element x);

// The n-element chain 0 < 1 < ... < n-1.
FiniteLattice chain(std::size_t n);

struct LatticeMap {
  FiniteLattice const* source = nullptr;
  FiniteLattice const* target = nullptr;
  std::vector<FiniteLattice::Element> assignment;
};

struct HomomorphismReport {
  bool meet_preserving = true;
  bool join_preserving = true;
  bool surjective = false;
  // First failing pair, in index order, and which operation failed.
  std::optional<std::pair<FiniteLattice::Element, FiniteLattice::Element>>
      counterexample;
  std::string failed_operation;

  bool is_homomorphism() const { return meet_preserving && join_preserving; }
};

// Throws InvalidArgument if the assignment is not total or points outside
// the target.
HomomorphismReport check_homomorphism(LatticeMap const& map);

// An order isomorphism first -> second, if one exists.
std::optional<std::vector<FiniteLattice::Element>> find_isomorphism(
    FiniteLattice const& first, FiniteLattice const& second);

}  // namespace modvar

#endif  // MODVAR_LATTICE_HPP
