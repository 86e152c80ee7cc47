#include "hogkit/linked_tree.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace hogkit {

NodeId LinkedTree::Nodes::add(NodeId parent_id, std::uint32_t node_depth, PatternIndex source_pattern,
                              PatternIndex leaf_pattern, NodeId link) {
  const auto id = static_cast<NodeId>(parent.size());
  parent.push_back(parent_id);
  depth.push_back(node_depth);
  source.push_back(source_pattern);
  pattern.push_back(leaf_pattern);
  suffix_link.push_back(link);
  return id;
}

LinkedTree::LinkedTree(PatternSet patterns, Nodes nodes) : patterns_(std::move(patterns)) {
  const std::size_t count = nodes.size();
  if (count == 0 || nodes.depth[0] != 0) throw InvariantError("tree must start with a depth-0 root");
  if (nodes.depth.size() != count || nodes.source.size() != count || nodes.pattern.size() != count ||
      nodes.suffix_link.size() != count) {
    throw InvariantError("node arrays have mismatched sizes");
  }

  // Children lists in input order, CSR layout.
  std::vector<std::uint32_t> offset(count + 1, 0);
  for (std::size_t v = 1; v < count; ++v) {
    const NodeId p = nodes.parent[v];
    if (p >= v) throw InvariantError("parent must precede child in node order");
    if (nodes.depth[p] >= nodes.depth[v]) throw InvariantError("child must be deeper than its parent");
    ++offset[p + 1];
  }
  for (std::size_t v = 0; v < count; ++v) offset[v + 1] += offset[v];
  std::vector<NodeId> kids(count > 0 ? count - 1 : 0);
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (std::size_t v = 1; v < count; ++v) kids[fill[nodes.parent[v]]++] = static_cast<NodeId>(v);
  }

  // Breadth-first renumbering.
  std::vector<NodeId> order;
  order.reserve(count);
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId v = order[head];
    for (auto i = offset[v]; i < offset[v + 1]; ++i) order.push_back(kids[i]);
  }
  std::vector<NodeId> new_id(count);
  for (std::size_t i = 0; i < count; ++i) new_id[order[i]] = static_cast<NodeId>(i);

  parent_.resize(count);
  depth_.resize(count);
  source_.resize(count);
  pattern_.resize(count);
  suffix_link_.resize(count);
  child_offset_.assign(count + 1, 0);
  children_.resize(count - 1);
  leaf_of_.assign(patterns_.size(), kNoNode);

  if (patterns_.empty()) throw InvariantError("tree over an empty pattern set");
  for (std::size_t i = 0; i < count; ++i) {
    const NodeId old = order[i];
    parent_[i] = i == 0 ? kRoot : new_id[nodes.parent[old]];
    depth_[i] = nodes.depth[old];
    source_[i] = nodes.source[old];
    pattern_[i] = nodes.pattern[old];
    const NodeId link = nodes.suffix_link[old];
    if (link >= count) throw InvariantError("suffix link out of range");
    suffix_link_[i] = new_id[link];
    if (i != 0 && (source_[i] >= patterns_.size() || patterns_[source_[i]].size() < depth_[i])) {
      throw InvariantError("node source pattern is shorter than the node");
    }
    child_offset_[i + 1] = child_offset_[i] + (offset[old + 1] - offset[old]);
  }
  source_[kRoot] = 0;
  // In BFS order the children of consecutive nodes are consecutive ids.
  for (std::size_t i = 1; i < count; ++i) children_[i - 1] = static_cast<NodeId>(i);

  for (std::size_t v = 0; v < count; ++v) {
    const PatternIndex x = pattern_[v];
    if (x == kNoPattern) continue;
    if (x >= patterns_.size() || leaf_of_[x] != kNoNode) throw InvariantError("pattern tag out of range or repeated");
    if (!is_leaf(static_cast<NodeId>(v))) throw InvariantError("pattern node has children");
    leaf_of_[x] = static_cast<NodeId>(v);
  }
  for (std::size_t v = 0; v < count; ++v) {
    if (is_leaf(static_cast<NodeId>(v)) && pattern_[v] == kNoPattern && count > 1) {
      throw InvariantError("leaf without a pattern");
    }
  }
  for (auto node : leaf_of_) {
    if (node == kNoNode) throw InvariantError("pattern without a leaf");
  }
}

std::string_view LinkedTree::label_text(NodeId v) const {
  const auto slice = label(v);
  return patterns_[slice.pattern].substr(slice.start, slice.size());
}

NodeId LinkedTree::child(NodeId v, unsigned char first) const {
  const auto kids = children(v);
  const auto base = depth_[v];
  auto it = std::lower_bound(kids.begin(), kids.end(), first, [&](NodeId c, unsigned char b) {
    return static_cast<unsigned char>(patterns_[source_[c]][base]) < b;
  });
  if (it == kids.end() || static_cast<unsigned char>(patterns_[source_[*it]][base]) != first) return kNoNode;
  return *it;
}

bool same_structure(const LinkedTree& a, const LinkedTree& b) {
  if (a.size() != b.size() || a.leaf_count() != b.leaf_count()) return false;
  for (NodeId v = 0; v < a.size(); ++v) {
    if (a.parent(v) != b.parent(v) || a.suffix_link(v) != b.suffix_link(v) || a.pattern(v) != b.pattern(v) ||
        a.string_of(v) != b.string_of(v)) {
      return false;
    }
  }
  return true;
}

}  // namespace hogkit
