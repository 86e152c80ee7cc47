#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hogkit/mark_hog.hpp"

namespace hogkit::bench {

enum class Family { random, dense };

std::optional<Family> parse_family(std::string_view name);

/// One marking run. Time and ops cover the marking phase only.
struct BenchRecord {
  MarkAlgorithm algorithm;
  std::size_t n = 0;
  std::size_t total_length = 0;
  std::uint64_t wall_time_ns = 0;
  std::uint64_t op_counter = 0;
  std::size_t node_count = 0;
  std::size_t list_entries = 0;
  std::size_t peak_stack_entries = 0;

  /// Nodes + list entries + peak stack entries.
  std::size_t memory_units() const noexcept { return node_count + list_entries + peak_stack_entries; }
};

struct BenchSize {
  std::size_t n;
  std::size_t length;
};

struct BenchConfig {
  std::vector<BenchSize> sizes;
  std::vector<MarkAlgorithm> algorithms{MarkAlgorithm::optimal};
  Family family = Family::random;
  unsigned sigma = 4;
  std::uint64_t seed = 1;
};

/// Generates one instance per size (drop-contained validation), builds the
/// trie and leaf lists once, then times each algorithm's marking phase.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Least-squares slope of log(op_counter) against log(total_length) over
/// the records of one algorithm. NaN with fewer than two distinct sizes.
double loglog_slope(std::span<const BenchRecord> records, MarkAlgorithm algorithm);

inline constexpr const char* kCsvHeader = "algo,n,total_length,wall_time_ns,op_counter,node_count,list_entries";

void write_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Parses "n:len,n:len,..." (also "nxlen").
std::vector<BenchSize> parse_sizes(const std::string& text);

}  // namespace hogkit::bench
