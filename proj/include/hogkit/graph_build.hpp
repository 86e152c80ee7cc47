#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hogkit/ac_trie.hpp"
#include "hogkit/linked_tree.hpp"
#include "hogkit/mark_hog.hpp"
#include "hogkit/overlap_index.hpp"

namespace hogkit {

enum class GraphKind { trie, ehog, hog };

std::string_view to_string(GraphKind kind);
std::optional<GraphKind> parse_graph_kind(std::string_view name);

/// Trie, EHOG or HOG: a LinkedTree tagged with what its node set means.
class OverlapGraph : public LinkedTree {
 public:
  OverlapGraph() = default;
  OverlapGraph(GraphKind kind, LinkedTree tree) : LinkedTree(std::move(tree)), kind_(kind) {}
  OverlapGraph(GraphKind kind, PatternSet patterns, Nodes nodes)
      : LinkedTree(std::move(patterns), std::move(nodes)), kind_(kind) {}

  GraphKind kind() const noexcept { return kind_; }
  std::size_t tree_edge_count() const noexcept { return size() - 1; }

  friend bool operator==(const OverlapGraph& a, const OverlapGraph& b) {
    return a.kind_ == b.kind_ && same_structure(a, b);
  }

 private:
  GraphKind kind_ = GraphKind::trie;
};

/// Nearest kept proper suffix for every kept node.
///
/// `kept_map[v]` is the new id of base node v, or kNoNode if v is dropped;
/// the root must be kept. Returns, indexed by new id, the new id of the
/// first kept node on v's suffix-link chain. Each base node is resolved
/// once, in order of increasing depth.
std::vector<NodeId> recompute_suffix_links(const LinkedTree& base, std::span<const NodeId> kept_map);

/// Removes every base node whose flag is 0, re-attaching its children to the
/// nearest kept ancestor. The root and all leaves must be kept. O(|base|).
OverlapGraph contract(const LinkedTree& base, std::span<const std::uint8_t> keep, GraphKind kind);

/// The trie itself as a graph.
OverlapGraph trie_graph(const AcTrie& trie);

/// Keeps the internal nodes that lie on some leaf's suffix path.
OverlapGraph build_ehog(const LinkedTree& base);
OverlapGraph build_ehog(const LinkedTree& base, const LeafLists& lists);

struct HogOptions {
  MarkAlgorithm algorithm = MarkAlgorithm::optimal;
  /// Contract the trie to the EHOG first and mark on the EHOG.
  bool via_ehog = false;
};

struct HogBuild {
  OverlapGraph graph;
  MarkResult marks;
  /// Nodes and list entries of the structure that was marked.
  std::size_t base_nodes = 0;
  std::size_t list_entries = 0;
};

/// Leaf lists, Euler traversal, marking and contraction on `base` (a trie
/// or an EHOG).
HogBuild mark_and_contract(const LinkedTree& base, MarkAlgorithm algorithm);

/// Builds the HOG from a trie, directly or through the EHOG.
HogBuild build_hog(const AcTrie& trie, HogOptions options = {});

/// HOG computed with the EHOG as the base structure.
HogBuild mark_hog_on_ehog(const OverlapGraph& ehog, MarkAlgorithm algorithm = MarkAlgorithm::optimal);

}  // namespace hogkit
