#include "doctest.h"
#include "hogkit/serialize.hpp"
#include "json.hpp"
#include "test_util.hpp"

using namespace hogkit;
using nlohmann::json;

TEST_CASE("figure-1 HOG as JSON") {
  const auto ps = test::figure1();
  const auto hog = build_hog(build_trie(ps)).graph;
  const auto doc = json::parse(to_json(hog));
  CHECK(doc["kind"] == "hog");
  CHECK(doc["nodes"].size() == 6);
  CHECK(doc["tree_edges"].size() == 5);
  CHECK(doc["suffix_links"].size() == 5);

  const auto& root = doc["nodes"][0];
  CHECK(root["id"] == 0);
  CHECK(root["string_len"] == 0);
  CHECK(root["is_leaf"] == false);
  CHECK(root["pattern"].is_null());

  std::set<std::string> labels;
  for (const auto& e : doc["tree_edges"]) labels.insert(e["label"].get<std::string>());
  CHECK(labels == std::set<std::string>{"aa", "dbd", "baa"});
  std::size_t leaves = 0;
  for (const auto& n : doc["nodes"]) leaves += n["is_leaf"].get<bool>();
  CHECK(leaves == 3);
}

TEST_CASE("single pattern serializes to one edge") {
  const auto hog = build_hog(build_trie(test::make_set({"ab"}))).graph;
  const auto doc = json::parse(to_json(hog));
  CHECK(doc["nodes"].size() == 2);
  CHECK(doc["tree_edges"].size() == 1);
  CHECK(doc["tree_edges"][0]["label"] == "ab");
  CHECK(doc["nodes"][1]["pattern"] == 0);
}

TEST_CASE("JSON round-trips every graph kind") {
  auto corpus = test::random_corpus(100, 8, 12, 31);
  corpus.push_back(test::make_set({std::string("\x00\xff\x80", 3), std::string("\x80\x00", 2), "\"\\"}));
  for (const auto& ps : corpus) {
    const auto trie = build_trie(ps);
    for (const auto& g : {trie_graph(trie), build_ehog(trie), build_hog(trie).graph}) {
      const auto text = to_json(g);
      const auto back = graph_from_json(text, ps);
      REQUIRE(back == g);
      CHECK(to_json(back) == text);
    }
  }
}

TEST_CASE("label text encoding") {
  const std::string bytes("\x00\x7f\x80\xff", 4);
  const auto text = bytes_to_json_text(bytes);
  CHECK(text.size() == 6);
  CHECK(json_text_to_bytes(text) == bytes);
  CHECK_THROWS_AS(json_text_to_bytes("\xe2\x82\xac"), IoError);
}

TEST_CASE("malformed JSON is rejected") {
  const auto ps = test::figure1();
  CHECK_THROWS_AS(graph_from_json("{", ps), IoError);
  CHECK_THROWS_AS(graph_from_json(R"({"kind":"hog"})", ps), IoError);

  auto doc = json::parse(to_json(build_hog(build_trie(ps)).graph));
  doc["tree_edges"][2]["label"] = "bab";  // no longer spells aabaa
  CHECK_THROWS_AS(graph_from_json(doc.dump(), ps), IoError);

  doc = json::parse(to_json(build_hog(build_trie(ps)).graph));
  doc["kind"] = "dag";
  CHECK_THROWS_AS(graph_from_json(doc.dump(), ps), IoError);
}

TEST_CASE("DOT output") {
  const auto hog = build_hog(build_trie(test::figure1())).graph;
  const auto dot = to_dot(hog);
  CHECK(dot.rfind("digraph hog {", 0) == 0);
  CHECK(dot.find("n1 -> n3 [label=\"baa\"]") != std::string::npos);
  CHECK(dot.find("n3 -> n1 [style=dashed") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);

  const auto odd = build_hog(build_trie(test::make_set({"a\"b", std::string("\x01", 1)}))).graph;
  const auto escaped = to_dot(odd);
  CHECK(escaped.find("a\\\"b") != std::string::npos);
  CHECK(escaped.find("\\\\x01") != std::string::npos);
}

TEST_CASE("stats output") {
  const auto stats = to_stats(build_hog(build_trie(test::figure1())).graph);
  CHECK(stats.find("nodes 6\n") != std::string::npos);
  CHECK(stats.find("internal_nodes 2\n") != std::string::npos);
  CHECK(stats.find("tree_edges 5\n") != std::string::npos);
}
