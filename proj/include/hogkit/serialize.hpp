#pragma once

#include <string>
#include <string_view>

#include "hogkit/graph_build.hpp"
#include "hogkit/pattern_set.hpp"

namespace hogkit {

/// JSON document:
///   { "kind": "hog|ehog|trie",
///     "nodes": [{"id", "string_len", "is_leaf", "pattern": idx|null}],
///     "tree_edges": [{"from", "to", "label"}],
///     "suffix_links": [{"from", "to"}] }
///
/// Nodes are in breadth-first order with ids equal to positions. Label
/// bytes are written as code points U+0000..U+00FF so arbitrary bytes
/// survive the UTF-8 requirement of JSON.
std::string to_json(const OverlapGraph& graph, int indent = 2);

/// Graphviz digraph: tree edges solid and labelled, suffix links dashed.
std::string to_dot(const OverlapGraph& graph);

/// Node/edge counts as `key value` lines.
std::string to_stats(const OverlapGraph& graph);

/// Rebuilds a graph from to_json output over the same patterns.
///
/// Accepts any tree-shaped document, not only ones produced by to_json:
/// node strings are spelled from the labels and checked against the
/// patterns. Throws IoError on malformed input.
OverlapGraph graph_from_json(std::string_view text, const PatternSet& patterns);

/// Byte string to the Latin-1 style UTF-8 used in JSON labels, and back.
std::string bytes_to_json_text(std::string_view bytes);
std::string json_text_to_bytes(std::string_view text);

}  // namespace hogkit
