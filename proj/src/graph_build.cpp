#include "hogkit/graph_build.hpp"

#include <algorithm>

namespace hogkit {

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::trie:
      return "trie";
    case GraphKind::ehog:
      return "ehog";
    case GraphKind::hog:
      return "hog";
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  if (name == "trie") return GraphKind::trie;
  if (name == "ehog") return GraphKind::ehog;
  if (name == "hog") return GraphKind::hog;
  return std::nullopt;
}

std::vector<NodeId> recompute_suffix_links(const LinkedTree& base, std::span<const NodeId> kept_map) {
  const std::size_t count = base.size();
  if (kept_map.size() != count || kept_map[kRoot] == kNoNode) {
    throw InvariantError("kept map must cover the base and keep the root");
  }

  // Counting sort by string length: a suffix link always points shallower.
  std::uint32_t max_depth = 0;
  for (NodeId v = 0; v < count; ++v) max_depth = std::max(max_depth, base.depth(v));
  std::vector<std::uint32_t> bucket(max_depth + 2, 0);
  for (NodeId v = 0; v < count; ++v) ++bucket[base.depth(v) + 1];
  for (std::uint32_t d = 0; d <= max_depth; ++d) bucket[d + 1] += bucket[d];
  std::vector<NodeId> by_depth(count);
  for (NodeId v = 0; v < count; ++v) by_depth[bucket[base.depth(v)]++] = v;

  // nearest[v]: first kept node strictly below v on its suffix chain.
  std::vector<NodeId> nearest(count, kRoot);
  std::size_t kept_count = 0;
  for (const NodeId v : by_depth) {
    if (kept_map[v] != kNoNode) ++kept_count;
    if (v == kRoot) continue;
    const NodeId s = base.suffix_link(v);
    nearest[v] = kept_map[s] != kNoNode ? s : nearest[s];
  }

  std::vector<NodeId> links(kept_count, kRoot);
  for (NodeId v = 1; v < count; ++v) {
    if (kept_map[v] != kNoNode) links[kept_map[v]] = kept_map[nearest[v]];
  }
  return links;
}

OverlapGraph contract(const LinkedTree& base, std::span<const std::uint8_t> keep, GraphKind kind) {
  const std::size_t count = base.size();
  if (keep.size() != count || !keep[kRoot]) throw InvariantError("keep flags must cover the base and keep the root");

  // Preorder walk: kept nodes get consecutive ids and siblings stay in
  // lexicographic order. anchor[v] is the nearest kept ancestor-or-self.
  std::vector<NodeId> kept_map(count, kNoNode);
  std::vector<NodeId> anchor(count, kRoot);
  std::vector<NodeId> preorder;
  preorder.reserve(count);
  std::vector<NodeId> stack{kRoot};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (v != kRoot) {
      const NodeId up = anchor[base.parent(v)];
      if (keep[v]) {
        anchor[v] = v;
        kept_map[v] = static_cast<NodeId>(preorder.size());
        preorder.push_back(v);
      } else {
        if (base.is_leaf(v)) throw InvariantError("contraction would drop a leaf");
        anchor[v] = up;
      }
    } else {
      kept_map[kRoot] = 0;
      preorder.push_back(kRoot);
    }
    const auto kids = base.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }

  const auto links = recompute_suffix_links(base, kept_map);

  LinkedTree::Nodes nodes;
  for (const NodeId v : preorder) {
    const NodeId parent = v == kRoot ? kRoot : kept_map[anchor[base.parent(v)]];
    const NodeId id = kept_map[v];
    nodes.add(parent, base.depth(v), base.label(v).pattern, base.pattern(v).value_or(kNoPattern), links[id]);
  }
  nodes.source[kRoot] = 0;
  return OverlapGraph(kind, base.patterns(), std::move(nodes));
}

OverlapGraph trie_graph(const AcTrie& trie) {
  const std::vector<std::uint8_t> keep(trie.size(), 1);
  return contract(trie, keep, GraphKind::trie);
}

OverlapGraph build_ehog(const LinkedTree& base) { return build_ehog(base, compute_leaf_lists(base)); }

OverlapGraph build_ehog(const LinkedTree& base, const LeafLists& lists) {
  std::vector<std::uint8_t> keep(base.size(), 0);
  for (NodeId v = 0; v < base.size(); ++v) keep[v] = v == kRoot || base.is_leaf(v) || !lists.of(v).empty();
  return contract(base, keep, GraphKind::ehog);
}

HogBuild mark_and_contract(const LinkedTree& base, MarkAlgorithm algorithm) {
  HogBuild out;
  const auto lists = compute_leaf_lists(base);
  const auto events = euler_traversal(base);
  out.marks = mark_hog(base, lists, events, algorithm);
  out.base_nodes = base.size();
  out.list_entries = lists.total_entries();
  out.graph = contract(base, out.marks.in_hog, GraphKind::hog);
  return out;
}

HogBuild build_hog(const AcTrie& trie, HogOptions options) {
  if (!options.via_ehog) return mark_and_contract(trie, options.algorithm);
  return mark_hog_on_ehog(build_ehog(trie), options.algorithm);
}

HogBuild mark_hog_on_ehog(const OverlapGraph& ehog, MarkAlgorithm algorithm) {
  if (ehog.kind() != GraphKind::ehog) throw InvariantError("mark_hog_on_ehog expects an EHOG");
  return mark_and_contract(ehog, algorithm);
}

}  // namespace hogkit
