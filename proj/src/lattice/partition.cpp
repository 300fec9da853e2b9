#include "modvar/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "modvar/error.hpp"

namespace modvar {

Partition::Partition(std::vector<Block> labels) : labels_(std::move(labels)) {
  Block max_label = 0;
  for (auto l : labels_) {
    max_label = std::max(max_label, l);
  }
  if (max_label < 4 * labels_.size() + 64) {
    constexpr Block unset = ~Block{0};
    std::vector<Block> renumber(max_label + 1, unset);
    Block next = 0;
    for (auto& l : labels_) {
      if (renumber[l] == unset) {
        renumber[l] = next++;
      }
      l = renumber[l];
    }
    block_count_ = next;
    return;
  }
  std::map<Block, Block> renumber;
  for (auto& l : labels_) {
    auto [it, inserted] =
        renumber.emplace(l, static_cast<Block>(renumber.size()));
    l = it->second;
  }
  block_count_ = renumber.size();
}

Partition Partition::discrete(std::size_t n) {
  std::vector<Block> labels(n);
  std::iota(labels.begin(), labels.end(), Block{0});
  return Partition(std::move(labels));
}

Partition Partition::full(std::size_t n) {
  return Partition(std::vector<Block>(n, 0));
}

Partition Partition::from_blocks(std::size_t n,
                                 std::vector<std::vector<std::size_t>> const& blocks) {
  std::vector<Block> labels(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t x : blocks[b]) {
      if (x >= n || seen[x]) {
        throw InvalidArgument("blocks do not partition 0.." +
                              std::to_string(n - 1));
      }
      seen[x] = true;
      labels[x] = static_cast<Block>(b);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidArgument("blocks do not cover every point");
  }
  return Partition(std::move(labels));
}

Partition Partition::generated_by(
    std::size_t n, std::span<std::pair<std::size_t, std::size_t> const> pairs) {
  UnionFind uf(n);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) {
      throw InvalidArgument("pair outside the ground set");
    }
    uf.unite(x, y);
  }
  return uf.to_partition();
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    out[labels_[x]].push_back(x);
  }
  return out;
}

bool Partition::refines(Partition const& other) const {
  if (size() != other.size()) {
    return false;
  }
  // Each block of this maps into a single block of other.
  std::vector<std::int64_t> image(block_count_, -1);
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    auto& target = image[labels_[x]];
    if (target < 0) {
      target = other.labels_[x];
    } else if (target != static_cast<std::int64_t>(other.labels_[x])) {
      return false;
    }
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (auto const& block : blocks()) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(block[i] + 1);
    }
    out += '}';
  }
  return out;
}

Partition meet(Partition const& a, Partition const& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("partition size mismatch");
  }
  std::vector<Partition::Block> labels(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    labels[x] = static_cast<Partition::Block>(a.block_of(x) * b.block_count() +
                                              b.block_of(x));
  }
  return Partition(std::move(labels));
}

Partition join(Partition const& a, Partition const& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("partition size mismatch");
  }
  UnionFind uf(a.size());
  std::vector<std::int64_t> first_a(a.block_count(), -1);
  std::vector<std::int64_t> first_b(b.block_count(), -1);
  for (std::size_t x = 0; x < a.size(); ++x) {
    auto& fa = first_a[a.block_of(x)];
    if (fa < 0) {
      fa = static_cast<std::int64_t>(x);
    } else {
      uf.unite(static_cast<std::size_t>(fa), x);
    }
    auto& fb = first_b[b.block_of(x)];
    if (fb < 0) {
      fb = static_cast<std::int64_t>(x);
    } else {
      uf.unite(static_cast<std::size_t>(fb), x);
    }
  }
  return uf.to_partition();
}

std::vector<Partition> all_partitions(std::size_t k) {
  std::vector<Partition> result;
  if (k == 0) {
    result.emplace_back();
    return result;
  }
  std::vector<Partition::Block> rg(k, 0);
  std::vector<Partition::Block> max_prefix(k, 0);  // max of rg[0..i]
  while (true) {
    result.emplace_back(rg);
    // Increment the restricted-growth string from the right.
    std::size_t i = k - 1;
    while (i > 0 && rg[i] > max_prefix[i - 1]) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++rg[i];
    max_prefix[i] = std::max(max_prefix[i - 1], rg[i]);
    for (std::size_t j = i + 1; j < k; ++j) {
      rg[j] = 0;
      max_prefix[j] = max_prefix[j - 1];
    }
  }
  return result;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) {
    return false;
  }
  if (rank_[x] < rank_[y]) {
    std::swap(x, y);
  }
  parent_[y] = x;
  if (rank_[x] == rank_[y]) {
    ++rank_[x];
  }
  return true;
}

Partition UnionFind::to_partition() {
  std::vector<Partition::Block> labels(parent_.size());
  for (std::size_t x = 0; x < parent_.size(); ++x) {
    labels[x] = static_cast<Partition::Block>(find(x));
  }
  return Partition(std::move(labels));
}

}  // namespace modvar
