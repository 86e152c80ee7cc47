#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hogkit/ac_trie.hpp"
#include "hogkit/linked_tree.hpp"
#include "hogkit/overlap_index.hpp"

namespace hogkit {

enum class MarkAlgorithm { per_leaf, quadratic, optimal };

std::string_view to_string(MarkAlgorithm algorithm);
std::optional<MarkAlgorithm> parse_mark_algorithm(std::string_view name);

/// Working state of a marking run.
///
/// stacks[x] holds the open internal nodes v with x in L_v, shallowest
/// first. `pending` lists the patterns whose stack has an unmarked top
/// (optimal variant only).
struct MarkState {
  std::vector<std::uint8_t> in_hog;
  std::vector<std::vector<NodeId>> stacks;
  std::vector<PatternIndex> pending;
  std::vector<std::uint8_t> in_pending;
};

struct MarkResult {
  std::vector<std::uint8_t> in_hog;
  MarkAlgorithm algorithm = MarkAlgorithm::optimal;
  /// Elementary steps: one per event, push, pop, pending insertion or
  /// removal, stack inspection and mark.
  std::uint64_t op_counter = 0;
  /// Number of times a stack top was marked.
  std::uint64_t mark_count = 0;
  /// Largest total number of entries held by all stacks at once.
  std::size_t peak_stack_entries = 0;

  std::vector<NodeId> marked_internal(const LinkedTree& tree) const;
};

/// Called before each event with the state as it stands.
using MarkObserver = std::function<void(const EulerEvent&, const MarkState&)>;

/// Nodes ov(x, leaf) over all patterns x with a non-empty overlap onto
/// `leaf`, sorted by id. Walks the ancestral path of `leaf` from the root.
std::vector<NodeId> mark_single_leaf(const LinkedTree& tree, const LeafLists& lists, NodeId leaf);

/// Union of mark_single_leaf over every leaf.
MarkResult mark_all_per_leaf(const LinkedTree& tree, const LeafLists& lists);

/// One stack per pattern; every leaf visit inspects all n stacks.
/// O(||P|| + n^2). Throws InvariantError on a pop that does not match.
MarkResult mark_all_quadratic(const LinkedTree& tree, const LeafLists& lists, std::span<const EulerEvent> events,
                              const MarkObserver& observer = {});

/// Like mark_all_quadratic but leaf visits only touch stacks whose top is
/// not yet marked. O(||P||).
MarkResult mark_all_optimal(const LinkedTree& tree, const LeafLists& lists, std::span<const EulerEvent> events,
                            const MarkObserver& observer = {});

MarkResult mark_hog(const LinkedTree& tree, const LeafLists& lists, std::span<const EulerEvent> events,
                    MarkAlgorithm algorithm);

}  // namespace hogkit
