#include "doctest.h"
#include "hogkit/ac_trie.hpp"
#include "hogkit/overlap_index.hpp"
#include "test_util.hpp"

using namespace hogkit;

namespace {

std::vector<PatternIndex> list_of(const AcTrie& trie, const LeafLists& lists, std::string_view s) {
  const auto span = lists.of(test::find_node(trie, s));
  return {span.begin(), span.end()};
}

}  // namespace

TEST_CASE("leaf lists of the figure-1 set") {
  const auto trie = build_trie(test::figure1());
  const auto lists = compute_leaf_lists(trie);
  // Patterns: 0 aabaa, 1 aadbd, 2 dbdaa.
  CHECK(list_of(trie, lists, "a") == std::vector<PatternIndex>{0, 2});
  CHECK(list_of(trie, lists, "aa") == std::vector<PatternIndex>{0, 2});
  CHECK(list_of(trie, lists, "d") == std::vector<PatternIndex>{1});
  CHECK(list_of(trie, lists, "dbd") == std::vector<PatternIndex>{1});
  for (const auto* s : {"", "aab", "aaba", "aad", "aadb", "db", "dbda"}) CHECK(list_of(trie, lists, s).empty());
  CHECK(lists.total_entries() == 6);
}

TEST_CASE("leaf lists without overlaps and with a self border") {
  const auto none = build_trie(test::make_set({"ab", "cd"}));
  CHECK(compute_leaf_lists(none).total_entries() == 0);

  const auto border = build_trie(test::make_set({"aa"}));
  const auto lists = compute_leaf_lists(border);
  CHECK(list_of(border, lists, "a") == std::vector<PatternIndex>{0});
  CHECK(lists.total_entries() == 1);
}

TEST_CASE("leaf list membership matches the proper-suffix oracle") {
  for (const auto& ps : test::random_corpus(300, 8, 12, 23)) {
    const auto trie = build_trie(ps);
    const auto lists = compute_leaf_lists(trie);
    CHECK(lists.total_entries() <= ps.total_length() - ps.size());
    CHECK(lists.of(kRoot).empty());
    for (NodeId v = 1; v < trie.size(); ++v) {
      const auto got = lists.of(v);
      std::vector<PatternIndex> expected;
      for (PatternIndex x = 0; x < ps.size(); ++x) {
        if (test::is_proper_suffix(trie.string_of(v), ps[x])) expected.push_back(x);
      }
      REQUIRE(std::vector<PatternIndex>(got.begin(), got.end()) == expected);
      if (trie.is_leaf(v)) CHECK(got.empty());
    }
  }
}

TEST_CASE("a leaf on a suffix path is an invariant breach") {
  // Hand-made tree over {ab, ba} whose leaf "ab" claims to link to leaf "ba".
  const auto ps = test::make_set({"ab", "ba"});
  LinkedTree::Nodes nodes;
  nodes.add(kRoot, 0, 0, kNoPattern, kRoot);   // 0 ε
  nodes.add(0, 1, 0, kNoPattern, kRoot);       // 1 a
  nodes.add(0, 1, 1, kNoPattern, kRoot);       // 2 b
  nodes.add(1, 2, 0, 0, 4);                    // 3 ab -> ba (bogus)
  nodes.add(2, 2, 1, 1, 1);                    // 4 ba
  const LinkedTree tree(ps, std::move(nodes));
  CHECK_THROWS_AS(compute_leaf_lists(tree), InvariantError);
}
