#include "hogkit/verify.hpp"

#include "hogkit/graph_build.hpp"
#include "hogkit/serialize.hpp"

namespace hogkit {

namespace {

void append(oracle::VerifyReport& into, const std::string& prefix, oracle::VerifyReport&& from) {
  for (auto& check : from.checks) {
    check.name = prefix + check.name;
    into.checks.push_back(std::move(check));
  }
}

}  // namespace

oracle::VerifyReport verify_pipeline(const PatternSet& patterns) {
  oracle::VerifyReport report;
  const auto trie = build_trie(patterns);
  append(report, "trie: ", oracle::verify_graph(trie_graph(trie), patterns));
  const auto ehog = build_ehog(trie);
  append(report, "ehog: ", oracle::verify_graph(ehog, patterns));

  oracle::CheckResult agreement{"hog: cross-variant agreement", {}};
  oracle::CheckResult routes{"hog: trie route vs ehog route", {}};
  std::vector<std::uint8_t> reference;
  for (const auto algorithm : {MarkAlgorithm::optimal, MarkAlgorithm::quadratic, MarkAlgorithm::per_leaf}) {
    const auto name = std::string(to_string(algorithm));
    auto direct = build_hog(trie, {algorithm, false});
    append(report, "hog/" + name + ": ", oracle::verify_graph(direct.graph, patterns));
    if (reference.empty()) {
      reference = direct.marks.in_hog;
    } else if (direct.marks.in_hog != reference) {
      agreement.failures.push_back(name + " marks differ from optimal");
    }
    const auto via = build_hog(trie, {algorithm, true});
    if (to_json(via.graph) != to_json(direct.graph)) routes.failures.push_back(name + ": serializations differ");
  }
  report.checks.push_back(std::move(agreement));
  report.checks.push_back(std::move(routes));
  return report;
}

}  // namespace hogkit
