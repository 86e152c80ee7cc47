#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hogkit/graph_build.hpp"
#include "hogkit/pattern_set.hpp"

/// Brute-force ground truth by direct string comparison. Shares no code
/// with the construction pipeline.
namespace hogkit::oracle {

/// Every l in [1, min(|p|,|q|) - 1] with suffix(p, l) == prefix(q, l),
/// ascending.
std::vector<std::size_t> all_overlaps(std::string_view p, std::string_view q);

/// Length of the longest overlap of (p, q); 0 if there is none.
std::size_t longest_overlap(std::string_view p, std::string_view q);

/// Overlap lengths for every ordered pair (i, j), self pairs included.
class OverlapTable {
 public:
  explicit OverlapTable(std::span<const std::string> patterns);

  std::size_t size() const noexcept { return n_; }
  std::size_t longest(std::size_t i, std::size_t j) const { return longest_[i * n_ + j]; }
  const std::vector<std::size_t>& all(std::size_t i, std::size_t j) const { return all_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<std::size_t> longest_;
  std::vector<std::vector<std::size_t>> all_;
};

using StringSet = std::set<std::string>;

/// {ε} ∪ P ∪ {longest overlaps of all ordered pairs}.
StringSet hog_node_oracle(std::span<const std::string> patterns);
/// {ε} ∪ P ∪ {all overlaps of all ordered pairs}.
StringSet ehog_node_oracle(std::span<const std::string> patterns);
/// {ε} ∪ all prefixes of P.
StringSet trie_node_oracle(std::span<const std::string> patterns);

/// Naive O(n^2 L) check that no pattern occurs inside another or twice.
bool is_factor_free(std::span<const std::string> patterns);

struct CheckResult {
  std::string name;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  std::size_t failure_count() const noexcept;
  std::string to_text() const;
  std::string to_json() const;
};

/// Compares a graph against the oracle node set for its kind and checks
/// label spelling, leaf patterns, the longest-prefix parent property and
/// the longest-suffix link property. Failures are entries, never throws.
VerifyReport verify_graph(const OverlapGraph& graph, const PatternSet& patterns);

inline constexpr std::size_t kDefaultSizeGuard = 100000;

/// HOGKIT_SIZE_GUARD if set to a positive integer, else the default.
std::size_t size_guard_from_env();

class SizeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws SizeGuardExceeded if ||P|| is above `guard`.
void enforce_size_guard(const PatternSet& patterns, std::size_t guard);

}  // namespace hogkit::oracle
