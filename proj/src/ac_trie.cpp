#include "hogkit/ac_trie.hpp"

#include <array>
#include <unordered_map>

namespace hogkit {

namespace detail {

namespace {

std::uint64_t edge_key(NodeId node, std::uint8_t byte) { return (static_cast<std::uint64_t>(node) << 8) | byte; }

}  // namespace

TrieCore build_trie_core(std::span<const std::string> strings) {
  TrieCore core;
  std::size_t total = 0;
  for (const auto& s : strings) total += s.size();

  core.parent.reserve(total + 1);
  core.byte.reserve(total + 1);
  core.depth.reserve(total + 1);
  core.source.reserve(total + 1);
  core.terminal.reserve(total + 1);
  core.parent.push_back(kRoot);
  core.byte.push_back(0);
  core.depth.push_back(0);
  core.source.push_back(kNoPattern);
  core.terminal.push_back(kNoPattern);
  core.end_node.reserve(strings.size());

  std::unordered_map<std::uint64_t, NodeId> go;
  go.reserve(total);
  for (PatternIndex i = 0; i < strings.size(); ++i) {
    NodeId v = kRoot;
    for (const char c : strings[i]) {
      const auto b = static_cast<std::uint8_t>(c);
      auto [it, inserted] = go.try_emplace(edge_key(v, b), static_cast<NodeId>(core.parent.size()));
      if (inserted) {
        core.parent.push_back(v);
        core.byte.push_back(b);
        core.depth.push_back(core.depth[v] + 1);
        core.source.push_back(i);
        core.terminal.push_back(kNoPattern);
      }
      v = it->second;
    }
    if (core.terminal[v] == kNoPattern) core.terminal[v] = i;
    core.end_node.push_back(v);
  }

  const std::size_t count = core.size();

  // Children sorted by byte: counting sort on byte, then stable on parent.
  {
    std::array<std::uint32_t, 257> by_byte{};
    for (std::size_t v = 1; v < count; ++v) ++by_byte[core.byte[v] + 1];
    for (std::size_t b = 0; b < 256; ++b) by_byte[b + 1] += by_byte[b];
    std::vector<NodeId> sorted(count - 1);
    for (std::size_t v = 1; v < count; ++v) sorted[by_byte[core.byte[v]]++] = static_cast<NodeId>(v);

    core.child_offset.assign(count + 1, 0);
    for (std::size_t v = 1; v < count; ++v) ++core.child_offset[core.parent[v] + 1];
    for (std::size_t v = 0; v < count; ++v) core.child_offset[v + 1] += core.child_offset[v];
    core.children.resize(count - 1);
    std::vector<std::uint32_t> fill(core.child_offset.begin(), core.child_offset.end() - 1);
    for (const NodeId v : sorted) core.children[fill[core.parent[v]]++] = v;
  }

  // Suffix links in order of increasing depth.
  core.suffix_link.assign(count, kRoot);
  std::vector<NodeId> bfs;
  bfs.reserve(count);
  bfs.push_back(kRoot);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const NodeId v = bfs[head];
    for (auto k = core.child_offset[v]; k < core.child_offset[v + 1]; ++k) bfs.push_back(core.children[k]);
  }
  for (std::size_t k = 1; k < bfs.size(); ++k) {
    const NodeId v = bfs[k];
    const NodeId p = core.parent[v];
    if (p == kRoot) continue;
    NodeId w = core.suffix_link[p];
    while (true) {
      if (auto it = go.find(edge_key(w, core.byte[v])); it != go.end()) {
        core.suffix_link[v] = it->second;
        break;
      }
      if (w == kRoot) break;
      w = core.suffix_link[w];
    }
  }
  return core;
}

}  // namespace detail

AcTrie build_trie(const PatternSet& patterns) {
  const auto core = detail::build_trie_core(patterns.patterns());
  const std::size_t count = core.size();

  // Feed nodes breadth-first with byte-sorted siblings.
  std::vector<NodeId> order;
  order.reserve(count);
  order.push_back(kRoot);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId v = order[head];
    for (auto k = core.child_offset[v]; k < core.child_offset[v + 1]; ++k) order.push_back(core.children[k]);
  }
  std::vector<NodeId> position(count);
  for (std::size_t i = 0; i < count; ++i) position[order[i]] = static_cast<NodeId>(i);

  LinkedTree::Nodes nodes;
  nodes.parent.reserve(count);
  nodes.depth.reserve(count);
  nodes.source.reserve(count);
  nodes.pattern.reserve(count);
  nodes.suffix_link.reserve(count);
  for (const NodeId v : order) {
    nodes.add(position[core.parent[v]], core.depth[v], core.source[v], core.terminal[v], position[core.suffix_link[v]]);
  }
  return AcTrie(LinkedTree(patterns, std::move(nodes)));
}

std::vector<EulerEvent> euler_traversal(const LinkedTree& tree) {
  std::vector<EulerEvent> events;
  events.reserve(2 * tree.internal_count() + tree.leaf_count());
  for_each_euler_event(tree, [&](const EulerEvent& e) { events.push_back(e); });
  return events;
}

}  // namespace hogkit
