#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hogkit/pattern_set.hpp"
#include "hogkit/types.hpp"

namespace hogkit {

/// Edge label as a byte range of one pattern. Never materialized.
struct LabelSlice {
  PatternIndex pattern;
  std::uint32_t start;
  std::uint32_t end;

  std::uint32_t size() const noexcept { return end - start; }
  friend bool operator==(const LabelSlice&, const LabelSlice&) = default;
};

/// A rooted tree over prefixes of a pattern set, with suffix links.
///
/// This is the common representation of the Aho-Corasick trie, the EHOG and
/// the HOG: every node stands for a prefix of some pattern, tree edges go to
/// the longest proper prefix kept in the node set and suffix links to the
/// longest proper suffix kept in it. Nodes are numbered breadth-first with
/// siblings in lexicographic order, so two trees with the same node strings
/// and links have identical arrays.
class LinkedTree {
 public:
  /// Raw node description used to assemble a tree.
  ///
  /// Parents must precede their children and siblings must appear in
  /// lexicographic order; node 0 is the root. `source[v]` names a pattern
  /// that has v's string as a prefix, `pattern[v]` is set only on leaves.
  struct Nodes {
    std::vector<NodeId> parent;
    std::vector<std::uint32_t> depth;
    std::vector<PatternIndex> source;
    std::vector<PatternIndex> pattern;
    std::vector<NodeId> suffix_link;

    std::size_t size() const noexcept { return parent.size(); }
    NodeId add(NodeId parent_id, std::uint32_t node_depth, PatternIndex source_pattern, PatternIndex leaf_pattern,
               NodeId link);
  };

  LinkedTree() = default;
  /// Throws InvariantError if `nodes` is not a well-formed tree over `patterns`.
  LinkedTree(PatternSet patterns, Nodes nodes);

  const PatternSet& patterns() const noexcept { return patterns_; }
  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t leaf_count() const noexcept { return leaf_of_.size(); }
  std::size_t internal_count() const noexcept { return size() - leaf_count(); }

  NodeId parent(NodeId v) const { return parent_[v]; }
  std::span<const NodeId> children(NodeId v) const {
    return {children_.data() + child_offset_[v], children_.data() + child_offset_[v + 1]};
  }
  /// The root links to itself.
  NodeId suffix_link(NodeId v) const { return suffix_link_[v]; }
  /// Length of the node's string.
  std::uint32_t depth(NodeId v) const { return depth_[v]; }
  bool is_leaf(NodeId v) const { return child_offset_[v] == child_offset_[v + 1]; }
  std::optional<PatternIndex> pattern(NodeId v) const {
    return pattern_[v] == kNoPattern ? std::nullopt : std::optional<PatternIndex>(pattern_[v]);
  }
  NodeId leaf(PatternIndex x) const { return leaf_of_[x]; }

  /// Label of the tree edge entering v. v must not be the root.
  LabelSlice label(NodeId v) const { return {source_[v], depth_[parent_[v]], depth_[v]}; }
  std::string_view label_text(NodeId v) const;
  std::string_view string_of(NodeId v) const { return patterns_[source_[v]].substr(0, depth_[v]); }

  /// First child whose label starts with `first`, or kNoNode.
  NodeId child(NodeId v, unsigned char first) const;

 private:
  PatternSet patterns_;
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<PatternIndex> source_;
  std::vector<PatternIndex> pattern_;
  std::vector<NodeId> suffix_link_;
  std::vector<std::uint32_t> child_offset_;
  std::vector<NodeId> children_;
  std::vector<NodeId> leaf_of_;
};

/// Same node strings, tree edges, leaf patterns and suffix links.
bool same_structure(const LinkedTree& a, const LinkedTree& b);

}  // namespace hogkit
