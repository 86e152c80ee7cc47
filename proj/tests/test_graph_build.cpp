#include <sstream>

#include "doctest.h"
#include "hogkit/graph_build.hpp"
#include "hogkit/oracle.hpp"
#include "hogkit/serialize.hpp"
#include "test_util.hpp"

using namespace hogkit;

namespace {

std::string label_into(const OverlapGraph& g, std::string_view s) {
  return std::string(g.label_text(test::find_node(g, s)));
}
std::string parent_of(const OverlapGraph& g, std::string_view s) {
  return std::string(g.string_of(g.parent(test::find_node(g, s))));
}
std::string link_of(const OverlapGraph& g, std::string_view s) {
  return std::string(g.string_of(g.suffix_link(test::find_node(g, s))));
}

}  // namespace

TEST_CASE("figure-1 HOG") {
  const auto trie = build_trie(test::figure1());
  const auto hog = build_hog(trie).graph;
  CHECK(hog.kind() == GraphKind::hog);
  CHECK(hog.size() == 6);
  CHECK(test::internal_strings(hog) == std::set<std::string>{"aa", "dbd"});

  CHECK(parent_of(hog, "aa") == "");
  CHECK(label_into(hog, "aa") == "aa");
  CHECK(parent_of(hog, "dbd") == "");
  CHECK(label_into(hog, "dbd") == "dbd");
  CHECK(parent_of(hog, "aabaa") == "aa");
  CHECK(label_into(hog, "aabaa") == "baa");
  CHECK(parent_of(hog, "aadbd") == "aa");
  CHECK(label_into(hog, "aadbd") == "dbd");
  CHECK(parent_of(hog, "dbdaa") == "dbd");
  CHECK(label_into(hog, "dbdaa") == "aa");

  CHECK(link_of(hog, "aabaa") == "aa");
  CHECK(link_of(hog, "aadbd") == "dbd");
  CHECK(link_of(hog, "dbdaa") == "aa");
  CHECK(link_of(hog, "aa") == "");
  CHECK(link_of(hog, "dbd") == "");

  // Slices widen backwards into the source pattern.
  const auto slice = hog.label(test::find_node(hog, "dbd"));
  CHECK(slice.start == 0);
  CHECK(slice.end == 3);
}

TEST_CASE("figure-1 EHOG") {
  const auto ehog = build_ehog(build_trie(test::figure1()));
  CHECK(ehog.kind() == GraphKind::ehog);
  CHECK(test::internal_strings(ehog) == std::set<std::string>{"a", "aa", "d", "dbd"});
  CHECK(link_of(ehog, "aa") == "a");
  CHECK(link_of(ehog, "dbd") == "d");
  CHECK(link_of(ehog, "a") == "");
  CHECK(link_of(ehog, "d") == "");
  CHECK(label_into(ehog, "dbd") == "bd");
}

TEST_CASE("contraction edge cases") {
  const auto trie = build_trie(test::figure1());
  const auto identity = trie_graph(trie);
  CHECK(identity.kind() == GraphKind::trie);
  CHECK(same_structure(identity, trie));

  const auto star = build_hog(build_trie(test::make_set({"ab", "cd"}))).graph;
  CHECK(star.size() == 3);
  CHECK(star.children(kRoot).size() == 2);
  CHECK(label_into(star, "ab") == "ab");
  CHECK(label_into(star, "cd") == "cd");
  CHECK(test::internal_strings(build_ehog(build_trie(test::make_set({"ab", "cd"})))).empty());

  const std::vector<std::uint8_t> drops_leaf(trie.size(), 0);
  std::vector<std::uint8_t> keep_root = drops_leaf;
  keep_root[kRoot] = 1;
  CHECK_THROWS_AS(contract(trie, keep_root, GraphKind::hog), InvariantError);
  CHECK_THROWS_AS(contract(trie, drops_leaf, GraphKind::hog), InvariantError);
}

TEST_CASE("siblings may share a first byte after contraction") {
  // "a" is not an overlap, but "ab" and "ac" are; both hang off the root
  // next to "x".
  const auto ps = test::make_set({"xab", "abx", "xac", "acx"});
  const auto hog = build_hog(build_trie(ps)).graph;
  CHECK(parent_of(hog, "ab") == "");
  CHECK(parent_of(hog, "ac") == "");
  const auto kids = hog.children(kRoot);
  REQUIRE(kids.size() == 3);
  CHECK(hog.string_of(kids[0]) == "ab");
  CHECK(hog.string_of(kids[1]) == "ac");
  CHECK(hog.string_of(kids[2]) == "x");
  CHECK(hog.child(kRoot, 'a') == kids[0]);
  CHECK(oracle::verify_graph(hog, ps).passed());
}

TEST_CASE("recompute_suffix_links resolves the first kept node on the chain") {
  const auto trie = build_trie(test::figure1());
  std::vector<NodeId> kept(trie.size(), kNoNode);
  const std::vector<std::string> keep{"", "aa", "dbd", "aabaa", "aadbd", "dbdaa"};
  for (std::size_t i = 0; i < keep.size(); ++i) kept[test::find_node(trie, keep[i])] = static_cast<NodeId>(i);
  const auto links = recompute_suffix_links(trie, kept);
  REQUIRE(links.size() == keep.size());
  CHECK(links == std::vector<NodeId>{0, 0, 0, 1, 2, 1});
}

TEST_CASE("both routes build the same HOG") {
  for (const auto* text : {"aabaa aadbd dbdaa", "aa"}) {
    std::vector<std::string> raw;
    std::istringstream in(text);
    for (std::string s; in >> s;) raw.push_back(s);
    const auto trie = build_trie(test::make_set(raw));
    const auto direct = build_hog(trie).graph;
    const auto via = mark_hog_on_ehog(build_ehog(trie)).graph;
    CHECK(direct == via);
  }
  CHECK(test::internal_strings(build_hog(build_trie(test::make_set({"aa"})), {MarkAlgorithm::optimal, true}).graph) ==
        std::set<std::string>{"a"});
  CHECK_THROWS_AS(mark_hog_on_ehog(trie_graph(build_trie(test::figure1()))), InvariantError);

  for (const auto& ps : test::random_corpus(100, 8, 12, 99)) {
    const auto trie = build_trie(ps);
    for (const auto algorithm : {MarkAlgorithm::optimal, MarkAlgorithm::quadratic, MarkAlgorithm::per_leaf}) {
      const auto direct = build_hog(trie, {algorithm, false}).graph;
      const auto via = build_hog(trie, {algorithm, true}).graph;
      REQUIRE(direct == via);
      CHECK(to_json(direct) == to_json(via));
    }
  }
}

TEST_CASE("graph properties on random instances") {
  for (const auto& ps : test::random_corpus(200, 8, 12, 5)) {
    const auto trie = build_trie(ps);
    const auto ehog = build_ehog(trie);
    const auto hog = build_hog(trie).graph;
    const auto trie_nodes = test::node_strings(trie);
    const auto ehog_nodes = test::node_strings(ehog);
    const auto hog_nodes = test::node_strings(hog);
    CHECK(hog_nodes == oracle::hog_node_oracle(ps.patterns()));
    CHECK(ehog_nodes == oracle::ehog_node_oracle(ps.patterns()));
    CHECK(std::includes(ehog_nodes.begin(), ehog_nodes.end(), hog_nodes.begin(), hog_nodes.end()));
    CHECK(std::includes(trie_nodes.begin(), trie_nodes.end(), ehog_nodes.begin(), ehog_nodes.end()));

    for (const OverlapGraph* g : {&ehog, &hog}) {
      for (PatternIndex x = 0; x < ps.size(); ++x) {
        std::string spelled;
        std::size_t bytes = 0;
        std::vector<NodeId> path;
        for (NodeId v = g->leaf(x); v != kRoot; v = g->parent(v)) path.push_back(v);
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
          spelled += g->label_text(*it);
          bytes += g->label(*it).size();
          CHECK(spelled == g->string_of(*it));
        }
        CHECK(spelled == ps[x]);
        CHECK(bytes == ps[x].size());
      }
    }
  }
}
