#include "hogkit/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace hogkit {

using nlohmann::ordered_json;

std::string bytes_to_json_text(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size());
  for (const char c : bytes) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 0x80) {
      out.push_back(c);
    } else {
      out.push_back(static_cast<char>(0xC0 | (b >> 6)));
      out.push_back(static_cast<char>(0x80 | (b & 0x3F)));
    }
  }
  return out;
}

std::string json_text_to_bytes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto b = static_cast<unsigned char>(text[i]);
    if (b < 0x80) {
      out.push_back(text[i]);
    } else if ((b == 0xC2 || b == 0xC3) && i + 1 < text.size()) {
      const auto next = static_cast<unsigned char>(text[++i]);
      out.push_back(static_cast<char>(((b & 0x03) << 6) | (next & 0x3F)));
    } else {
      throw IoError("label contains a code point above U+00FF");
    }
  }
  return out;
}

std::string to_json(const OverlapGraph& graph, int indent) {
  ordered_json doc;
  doc["kind"] = std::string(to_string(graph.kind()));
  auto nodes = ordered_json::array();
  auto edges = ordered_json::array();
  auto links = ordered_json::array();
  for (NodeId v = 0; v < graph.size(); ++v) {
    ordered_json node;
    node["id"] = v;
    node["string_len"] = graph.depth(v);
    node["is_leaf"] = graph.is_leaf(v);
    if (const auto x = graph.pattern(v)) {
      node["pattern"] = *x;
    } else {
      node["pattern"] = nullptr;
    }
    nodes.push_back(std::move(node));
    if (v == kRoot) continue;
    edges.push_back({{"from", graph.parent(v)}, {"to", v}, {"label", bytes_to_json_text(graph.label_text(v))}});
  }
  for (NodeId v = 1; v < graph.size(); ++v) links.push_back({{"from", v}, {"to", graph.suffix_link(v)}});
  doc["nodes"] = std::move(nodes);
  doc["tree_edges"] = std::move(edges);
  doc["suffix_links"] = std::move(links);
  return doc.dump(indent) + "\n";
}

namespace {

std::string dot_escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (b < 0x20 || b >= 0x7F) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\\\x%02X", b);
      out += buf;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string to_dot(const OverlapGraph& graph) {
  std::ostringstream out;
  out << "digraph " << to_string(graph.kind()) << " {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=circle];\n";
  for (NodeId v = 0; v < graph.size(); ++v) {
    out << "  n" << v << " [label=\"" << (v == kRoot ? "ε" : dot_escape(graph.string_of(v))) << '"';
    if (graph.is_leaf(v)) out << ", shape=box";
    out << "];\n";
  }
  for (NodeId v = 1; v < graph.size(); ++v) {
    out << "  n" << graph.parent(v) << " -> n" << v << " [label=\"" << dot_escape(graph.label_text(v)) << "\"];\n";
  }
  for (NodeId v = 1; v < graph.size(); ++v) {
    out << "  n" << v << " -> n" << graph.suffix_link(v) << " [style=dashed, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_stats(const OverlapGraph& graph) {
  std::ostringstream out;
  out << "kind " << to_string(graph.kind()) << '\n';
  out << "nodes " << graph.size() << '\n';
  out << "internal_nodes " << graph.internal_count() - 1 << '\n';
  out << "leaves " << graph.leaf_count() << '\n';
  out << "tree_edges " << graph.tree_edge_count() << '\n';
  out << "suffix_links " << graph.size() - 1 << '\n';
  return out.str();
}

OverlapGraph graph_from_json(std::string_view text, const PatternSet& patterns) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("invalid graph JSON: ") + e.what());
  }
  try {
    const auto kind = parse_graph_kind(doc.at("kind").get<std::string>());
    if (!kind) throw IoError("unknown graph kind");
    const auto& nodes = doc.at("nodes");
    const std::size_t count = nodes.size();
    if (count == 0) throw IoError("graph has no nodes");

    std::vector<NodeId> parent(count, kNoNode);
    std::vector<std::string> label(count);
    std::vector<NodeId> link(count, kRoot);
    std::vector<PatternIndex> leaf_pattern(count, kNoPattern);
    std::vector<std::uint32_t> declared_len(count, 0);
    for (const auto& node : nodes) {
      const auto id = node.at("id").get<std::size_t>();
      if (id >= count) throw IoError("node id out of range");
      declared_len[id] = node.at("string_len").get<std::uint32_t>();
      if (!node.at("pattern").is_null()) leaf_pattern[id] = node.at("pattern").get<PatternIndex>();
    }
    for (const auto& edge : doc.at("tree_edges")) {
      const auto from = edge.at("from").get<std::size_t>();
      const auto to = edge.at("to").get<std::size_t>();
      if (from >= count || to >= count || to == kRoot || parent[to] != kNoNode) throw IoError("bad tree edge");
      parent[to] = static_cast<NodeId>(from);
      label[to] = json_text_to_bytes(edge.at("label").get<std::string>());
    }
    for (const auto& entry : doc.at("suffix_links")) {
      const auto from = entry.at("from").get<std::size_t>();
      const auto to = entry.at("to").get<std::size_t>();
      if (from >= count || to >= count) throw IoError("bad suffix link");
      link[from] = static_cast<NodeId>(to);
    }

    // Order parents before children, siblings by label.
    std::vector<std::vector<NodeId>> kids(count);
    for (NodeId v = 1; v < count; ++v) {
      if (parent[v] == kNoNode) throw IoError("node without a parent");
      kids[parent[v]].push_back(v);
    }
    for (auto& list : kids) {
      std::sort(list.begin(), list.end(), [&](NodeId a, NodeId b) { return label[a] < label[b]; });
    }
    std::vector<NodeId> order{kRoot};
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (const NodeId c : kids[order[head]]) order.push_back(c);
    }
    if (order.size() != count) throw IoError("tree edges do not form a tree rooted at node 0");

    std::vector<std::string> spelled(count);
    for (std::size_t i = 1; i < count; ++i) spelled[order[i]] = spelled[parent[order[i]]] + label[order[i]];

    // Any descendant leaf pattern spells a node's string as a prefix.
    std::vector<PatternIndex> source(count, kNoPattern);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId v = *it;
      if (leaf_pattern[v] != kNoPattern) {
        if (leaf_pattern[v] >= patterns.size()) throw IoError("pattern index out of range");
        source[v] = leaf_pattern[v];
      }
      if (v != kRoot && source[v] != kNoPattern && source[parent[v]] == kNoPattern) source[parent[v]] = source[v];
    }
    std::vector<NodeId> position(count);
    for (std::size_t i = 0; i < count; ++i) position[order[i]] = static_cast<NodeId>(i);

    LinkedTree::Nodes out;
    for (const NodeId v : order) {
      if (source[v] == kNoPattern) throw IoError("node has no leaf below it");
      if (spelled[v].size() != declared_len[v] || patterns[source[v]].substr(0, spelled[v].size()) != spelled[v]) {
        throw IoError("node string does not match its string_len or the patterns");
      }
      out.add(position[parent[v] == kNoNode ? kRoot : parent[v]], declared_len[v], source[v], leaf_pattern[v],
              position[link[v]]);
    }
    return OverlapGraph(*kind, patterns, std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed graph JSON: ") + e.what());
  } catch (const InvariantError& e) {
    throw IoError(std::string("graph JSON is not a valid tree: ") + e.what());
  }
}

}  // namespace hogkit
