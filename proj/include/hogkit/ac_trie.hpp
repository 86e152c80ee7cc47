#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hogkit/linked_tree.hpp"
#include "hogkit/pattern_set.hpp"
#include "hogkit/types.hpp"

namespace hogkit {

namespace detail {

/// Goto/failure structure over arbitrary strings, before any validation.
///
/// Node ids are in insertion order. Children are kept in CSR form sorted by
/// byte. `terminal[v]` is the first input string ending at v.
struct TrieCore {
  std::vector<NodeId> parent;
  std::vector<std::uint8_t> byte;
  std::vector<std::uint32_t> depth;
  std::vector<PatternIndex> source;
  std::vector<PatternIndex> terminal;
  std::vector<NodeId> suffix_link;
  std::vector<std::uint32_t> child_offset;
  std::vector<NodeId> children;
  /// For each input string, the node it ends at.
  std::vector<NodeId> end_node;

  std::size_t size() const noexcept { return parent.size(); }
  bool has_children(NodeId v) const { return child_offset[v] != child_offset[v + 1]; }
};

TrieCore build_trie_core(std::span<const std::string> strings);

}  // namespace detail

/// Aho-Corasick trie of a pattern set: every prefix of every pattern is a
/// node, edges carry one byte and each node links to its longest proper
/// suffix that is also a node. Leaves are exactly the patterns.
class AcTrie : public LinkedTree {
 public:
  AcTrie() = default;
  explicit AcTrie(LinkedTree tree) : LinkedTree(std::move(tree)) {}

  unsigned char incoming_byte(NodeId v) const { return static_cast<unsigned char>(label_text(v)[0]); }
};

/// Builds the trie in O(||P||) expected time and space.
AcTrie build_trie(const PatternSet& patterns);

struct EulerEvent {
  enum class Kind : std::uint8_t { FirstVisit, LastVisit, LeafVisit };

  Kind kind;
  NodeId node;

  friend bool operator==(const EulerEvent&, const EulerEvent&) = default;
};

/// Depth-first walk with children in order. Internal nodes (the root
/// included) get a FirstVisit before and a LastVisit after their subtree,
/// leaves a single LeafVisit. Iterative; stack memory is O(height).
template <class Visitor>
void for_each_euler_event(const LinkedTree& tree, Visitor&& visit) {
  struct Frame {
    NodeId node;
    std::uint32_t next;
  };
  if (tree.size() == 0) return;
  std::vector<Frame> stack;
  const auto enter = [&](NodeId v) {
    if (tree.is_leaf(v)) {
      visit(EulerEvent{EulerEvent::Kind::LeafVisit, v});
    } else {
      visit(EulerEvent{EulerEvent::Kind::FirstVisit, v});
      stack.push_back({v, 0});
    }
  };
  enter(kRoot);
  while (!stack.empty()) {
    auto& top = stack.back();
    const auto kids = tree.children(top.node);
    if (top.next == kids.size()) {
      const NodeId done = top.node;
      stack.pop_back();
      visit(EulerEvent{EulerEvent::Kind::LastVisit, done});
      continue;
    }
    const NodeId next = kids[top.next++];
    enter(next);
  }
}

std::vector<EulerEvent> euler_traversal(const LinkedTree& tree);

}  // namespace hogkit
