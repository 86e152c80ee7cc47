#include "hogkit/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace hogkit::oracle {

std::vector<std::size_t> all_overlaps(std::string_view p, std::string_view q) {
  std::vector<std::size_t> out;
  const std::size_t limit = std::min(p.size(), q.size());
  for (std::size_t l = 1; l < limit; ++l) {
    if (p.substr(p.size() - l) == q.substr(0, l)) out.push_back(l);
  }
  return out;
}

std::size_t longest_overlap(std::string_view p, std::string_view q) {
  const auto all = all_overlaps(p, q);
  return all.empty() ? 0 : all.back();
}

OverlapTable::OverlapTable(std::span<const std::string> patterns)
    : n_(patterns.size()), longest_(n_ * n_, 0), all_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      all_[i * n_ + j] = all_overlaps(patterns[i], patterns[j]);
      if (!all_[i * n_ + j].empty()) longest_[i * n_ + j] = all_[i * n_ + j].back();
    }
  }
}

StringSet hog_node_oracle(std::span<const std::string> patterns) {
  StringSet out{""};
  out.insert(patterns.begin(), patterns.end());
  const OverlapTable table(patterns);
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      if (const auto l = table.longest(i, j); l > 0) out.insert(patterns[j].substr(0, l));
    }
  }
  return out;
}

StringSet ehog_node_oracle(std::span<const std::string> patterns) {
  StringSet out{""};
  out.insert(patterns.begin(), patterns.end());
  const OverlapTable table(patterns);
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) {
      for (const auto l : table.all(i, j)) out.insert(patterns[j].substr(0, l));
    }
  }
  return out;
}

StringSet trie_node_oracle(std::span<const std::string> patterns) {
  StringSet out;
  for (const auto& p : patterns) {
    for (std::size_t l = 0; l <= p.size(); ++l) out.insert(p.substr(0, l));
  }
  if (out.empty()) out.insert("");
  return out;
}

bool is_factor_free(std::span<const std::string> patterns) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = 0; j < patterns.size(); ++j) {
      if (i != j && patterns[j].find(patterns[i]) != std::string::npos) return false;
    }
  }
  return true;
}

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::size_t VerifyReport::failure_count() const noexcept {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.failures.size();
  return total;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& check : checks) {
    out << (check.passed() ? "PASS " : "FAIL ") << check.name << '\n';
    for (const auto& f : check.failures) out << "  " << f << '\n';
  }
  out << (passed() ? "all checks pass" : std::to_string(failure_count()) + " failure(s)") << '\n';
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["passed"] = passed();
  auto list = nlohmann::ordered_json::array();
  for (const auto& check : checks) {
    nlohmann::ordered_json item;
    item["name"] = check.name;
    item["passed"] = check.passed();
    item["failures"] = check.failures;
    list.push_back(std::move(item));
  }
  doc["checks"] = std::move(list);
  // Node strings in failures may hold arbitrary bytes.
  return doc.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

namespace {

std::string show(const std::string& s) { return s.empty() ? "ε" : "'" + s + "'"; }

std::string longest_prefix_in(const StringSet& set, const std::string& s) {
  for (std::size_t l = s.size(); l-- > 0;) {
    if (set.count(s.substr(0, l))) return s.substr(0, l);
  }
  return "";
}

std::string longest_suffix_in(const StringSet& set, const std::string& s) {
  for (std::size_t l = s.size(); l-- > 0;) {
    if (set.count(s.substr(s.size() - l))) return s.substr(s.size() - l);
  }
  return "";
}

}  // namespace

VerifyReport verify_graph(const OverlapGraph& graph, const PatternSet& patterns) {
  VerifyReport report;
  const auto& ps = patterns.patterns();
  const std::size_t count = graph.size();

  // Spell node strings from tree-edge labels, root first.
  std::vector<std::string> spelled(count);
  CheckResult spelling{"label-spelling", {}};
  {
    std::vector<NodeId> queue{kRoot};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId v = queue[head];
      for (const NodeId c : graph.children(v)) {
        const auto label = graph.label_text(c);
        if (label.empty()) spelling.failures.push_back("empty label on edge into " + std::to_string(c));
        spelled[c] = spelled[v] + std::string(label);
        queue.push_back(c);
      }
    }
    if (queue.size() != count) spelling.failures.push_back("tree edges do not reach every node");
    for (NodeId v = 0; v < count; ++v) {
      if (spelled[v].size() != graph.depth(v)) {
        spelling.failures.push_back("node " + show(spelled[v]) + " has string_len " + std::to_string(graph.depth(v)));
      }
    }
  }

  CheckResult leaves{"leaf-patterns", {}};
  for (NodeId v = 0; v < count; ++v) {
    const auto x = graph.pattern(v);
    if (graph.is_leaf(v) != x.has_value()) {
      leaves.failures.push_back("node " + show(spelled[v]) + " leaf/pattern mismatch");
    } else if (x && (*x >= ps.size() || ps[*x] != spelled[v])) {
      leaves.failures.push_back("leaf " + show(spelled[v]) + " does not spell pattern " + std::to_string(*x));
    }
  }

  StringSet expected;
  switch (graph.kind()) {
    case GraphKind::hog:
      expected = hog_node_oracle(ps);
      break;
    case GraphKind::ehog:
      expected = ehog_node_oracle(ps);
      break;
    case GraphKind::trie:
      expected = trie_node_oracle(ps);
      break;
  }

  CheckResult node_set{"node-set", {}};
  StringSet actual;
  for (const auto& s : spelled) {
    if (!actual.insert(s).second) node_set.failures.push_back("duplicate node " + show(s));
  }
  for (const auto& s : actual) {
    if (!expected.count(s)) node_set.failures.push_back("unexpected node " + show(s));
  }
  for (const auto& s : expected) {
    if (!actual.count(s)) node_set.failures.push_back("missing node " + show(s));
  }

  CheckResult tree_edges{"tree-edges", {}};
  CheckResult suffix_links{"suffix-links", {}};
  for (NodeId v = 1; v < count; ++v) {
    const auto want_parent = longest_prefix_in(expected, spelled[v]);
    if (spelled[graph.parent(v)] != want_parent) {
      tree_edges.failures.push_back("parent of " + show(spelled[v]) + " is " + show(spelled[graph.parent(v)]) +
                                    ", expected " + show(want_parent));
    }
    const auto want_link = longest_suffix_in(expected, spelled[v]);
    if (graph.suffix_link(v) >= count || spelled[graph.suffix_link(v)] != want_link) {
      const auto got = graph.suffix_link(v) < count ? show(spelled[graph.suffix_link(v)]) : std::string("<invalid>");
      suffix_links.failures.push_back("suffix link of " + show(spelled[v]) + " is " + got + ", expected " +
                                      show(want_link));
    }
  }
  if (graph.suffix_link(kRoot) != kRoot) suffix_links.failures.push_back("root does not link to itself");

  report.checks = {std::move(spelling), std::move(leaves), std::move(node_set), std::move(tree_edges),
                   std::move(suffix_links)};
  return report;
}

std::size_t size_guard_from_env() {
  if (const char* env = std::getenv("HOGKIT_SIZE_GUARD")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultSizeGuard;
}

void enforce_size_guard(const PatternSet& patterns, std::size_t guard) {
  if (patterns.total_length() > guard) {
    throw SizeGuardExceeded("input has total length " + std::to_string(patterns.total_length()) +
                            ", above the oracle size guard of " + std::to_string(guard) +
                            " (set HOGKIT_SIZE_GUARD to raise it)");
  }
}

}  // namespace hogkit::oracle
