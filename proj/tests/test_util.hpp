#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hogkit/generate.hpp"
#include "hogkit/linked_tree.hpp"
#include "hogkit/pattern_set.hpp"

namespace hogkit::test {

inline PatternSet make_set(std::vector<std::string> patterns) {
  return validate(std::move(patterns), ValidationPolicy::strict).set;
}

inline PatternSet figure1() { return make_set({"aabaa", "aadbd", "dbdaa"}); }

inline NodeId find_node(const LinkedTree& tree, std::string_view s) {
  for (NodeId v = 0; v < tree.size(); ++v) {
    if (tree.string_of(v) == s) return v;
  }
  return kNoNode;
}

inline std::set<std::string> node_strings(const LinkedTree& tree) {
  std::set<std::string> out;
  for (NodeId v = 0; v < tree.size(); ++v) out.emplace(tree.string_of(v));
  return out;
}

inline std::set<std::string> internal_strings(const LinkedTree& tree) {
  std::set<std::string> out;
  for (NodeId v = 1; v < tree.size(); ++v) {
    if (!tree.is_leaf(v)) out.emplace(tree.string_of(v));
  }
  return out;
}

inline bool is_proper_suffix(std::string_view s, std::string_view of) {
  return s.size() < of.size() && of.substr(of.size() - s.size()) == s;
}

/// Seeded small factor-free instances over alphabets 1, 2 and 4.
inline std::vector<PatternSet> random_corpus(std::size_t count, std::size_t max_n, std::size_t max_len,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const unsigned sigmas[] = {1, 2, 4};
  std::vector<PatternSet> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto raw = generate::random_instance(max_n, max_len, sigmas[i % 3], rng);
    out.push_back(validate(std::move(raw), ValidationPolicy::drop_contained).set);
  }
  return out;
}

}  // namespace hogkit::test
