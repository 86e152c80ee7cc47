#include "hogkit/overlap_index.hpp"

#include <string>

namespace hogkit {

LeafLists compute_leaf_lists(const LinkedTree& tree) {
  const std::size_t count = tree.size();
  const auto n = static_cast<PatternIndex>(tree.leaf_count());

  std::vector<std::uint32_t> offsets(count + 1, 0);
  for (PatternIndex x = 0; x < n; ++x) {
    for (NodeId y = tree.suffix_link(tree.leaf(x)); y != kRoot; y = tree.suffix_link(y)) {
      if (tree.is_leaf(y)) {
        throw InvariantError("leaf '" + std::string(tree.string_of(y)) + "' lies on the suffix path of pattern " +
                             std::to_string(x));
      }
      ++offsets[y + 1];
    }
  }
  for (std::size_t v = 0; v < count; ++v) offsets[v + 1] += offsets[v];

  std::vector<PatternIndex> entries(offsets[count]);
  std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
  for (PatternIndex x = 0; x < n; ++x) {
    for (NodeId y = tree.suffix_link(tree.leaf(x)); y != kRoot; y = tree.suffix_link(y)) entries[fill[y]++] = x;
  }
  return LeafLists(std::move(offsets), std::move(entries));
}

}  // namespace hogkit
