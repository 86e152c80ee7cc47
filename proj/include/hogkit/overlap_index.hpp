#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hogkit/linked_tree.hpp"
#include "hogkit/types.hpp"

namespace hogkit {

/// For every internal node v, the patterns that have v's string as a proper
/// suffix, in increasing pattern order. Stored as one flat pool.
class LeafLists {
 public:
  LeafLists() = default;
  LeafLists(std::vector<std::uint32_t> offsets, std::vector<PatternIndex> entries)
      : offsets_(std::move(offsets)), entries_(std::move(entries)) {}

  std::span<const PatternIndex> of(NodeId v) const {
    return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
  }
  std::size_t total_entries() const noexcept { return entries_.size(); }
  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<PatternIndex> entries_;
};

/// Walks the suffix path of every leaf and records the leaf at each node on
/// it, the root excluded. O(||P||).
///
/// Throws InvariantError if a leaf shows up on a suffix path, which means the
/// pattern set was not factor-free.
LeafLists compute_leaf_lists(const LinkedTree& tree);

}  // namespace hogkit
