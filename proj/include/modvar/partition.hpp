#ifndef MODVAR_PARTITION_HPP
#define MODVAR_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace modvar {

// An equivalence relation on {0, ..., n-1}, stored as block labels in
// restricted-growth form: the first point of each new block gets the next
// unused label. Two partitions are equal iff their label vectors are equal.
class Partition {
 public:
  using Block = std::uint32_t;

  Partition() = default;

  // Arbitrary labels; they are renumbered into restricted-growth form.
  explicit Partition(std::vector<Block> labels);

  static Partition discrete(std::size_t n);
  static Partition full(std::size_t n);
  static Partition from_blocks(std::size_t n,
                               std::vector<std::vector<std::size_t>> const& blocks);
  // Equivalence generated by the given pairs.
  static Partition generated_by(
      std::size_t n, std::span<std::pair<std::size_t, std::size_t> const> pairs);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  Block block_of(std::size_t x) const { return labels_[x]; }
  bool related(std::size_t x, std::size_t y) const {
    return labels_[x] == labels_[y];
  }
  std::span<Block const> labels() const noexcept { return labels_; }

  // Blocks in order of their least element, each sorted.
  std::vector<std::vector<std::size_t>> blocks() const;

  // True iff this refines other.
  bool refines(Partition const& other) const;

  // "{1,2}{3}" with 1-based points.
  std::string to_string() const;

  friend bool operator==(Partition const&, Partition const&) = default;
  friend std::strong_ordering operator<=>(Partition const& a,
                                          Partition const& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<Block> labels_;
  std::size_t block_count_ = 0;
};

Partition meet(Partition const& a, Partition const& b);
Partition join(Partition const& a, Partition const& b);

// All partitions of {0..k-1} in lexicographic restricted-growth order.
std::vector<Partition> all_partitions(std::size_t k);

// Small union-find used by congruence and closure construction.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0);

  std::size_t find(std::size_t x);
  // Returns true if two different classes were merged.
  bool unite(std::size_t x, std::size_t y);
  std::size_t size() const noexcept { return parent_.size(); }
  Partition to_partition();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace modvar

#endif  // MODVAR_PARTITION_HPP
