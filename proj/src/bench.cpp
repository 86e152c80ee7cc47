#include "hogkit/bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "hogkit/ac_trie.hpp"
#include "hogkit/generate.hpp"
#include "hogkit/overlap_index.hpp"
#include "hogkit/pattern_set.hpp"

namespace hogkit::bench {

std::optional<Family> parse_family(std::string_view name) {
  if (name == "random") return Family::random;
  if (name == "dense") return Family::dense;
  return std::nullopt;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  for (std::size_t k = 0; k < config.sizes.size(); ++k) {
    const auto [n, length] = config.sizes[k];
    const std::uint64_t seed = config.seed + k;
    auto raw = config.family == Family::dense ? generate::overlap_dense(n, length, seed)
                                              : generate::random_reads(n, length, config.sigma, seed);
    const auto patterns = validate(std::move(raw), ValidationPolicy::drop_contained).set;
    const auto trie = build_trie(patterns);
    const auto lists = compute_leaf_lists(trie);
    const auto events = euler_traversal(trie);

    for (const auto algorithm : config.algorithms) {
      const auto start = std::chrono::steady_clock::now();
      const auto marks = mark_hog(trie, lists, events, algorithm);
      const auto stop = std::chrono::steady_clock::now();
      BenchRecord r;
      r.algorithm = algorithm;
      r.n = patterns.size();
      r.total_length = patterns.total_length();
      r.wall_time_ns = static_cast<std::uint64_t>(std::chrono::nanoseconds(stop - start).count());
      r.op_counter = marks.op_counter;
      r.node_count = trie.size();
      r.list_entries = lists.total_entries();
      r.peak_stack_entries = marks.peak_stack_entries;
      records.push_back(r);
    }
  }
  return records;
}

double loglog_slope(std::span<const BenchRecord> records, MarkAlgorithm algorithm) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (const auto& r : records) {
    if (r.algorithm != algorithm || r.total_length == 0 || r.op_counter == 0) continue;
    const double x = std::log(static_cast<double>(r.total_length));
    const double y = std::log(static_cast<double>(r.op_counter));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  const double denom = static_cast<double>(m) * sxx - sx * sx;
  if (m < 2 || std::abs(denom) < 1e-12) return std::numeric_limits<double>::quiet_NaN();
  return (static_cast<double>(m) * sxy - sx * sy) / denom;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << to_string(r.algorithm) << ',' << r.n << ',' << r.total_length << ',' << r.wall_time_ns << ','
        << r.op_counter << ',' << r.node_count << ',' << r.list_entries << '\n';
  }
}

std::vector<BenchSize> parse_sizes(const std::string& text) {
  std::vector<BenchSize> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto sep = item.find_first_of(":x");
    if (sep == std::string::npos) throw std::invalid_argument("size '" + item + "' is not n:len");
    std::size_t used_n = 0, used_len = 0;
    const auto n = std::stoull(item.substr(0, sep), &used_n);
    const auto len = std::stoull(item.substr(sep + 1), &used_len);
    if (used_n != sep || used_len != item.size() - sep - 1 || n == 0 || len == 0) {
      throw std::invalid_argument("size '" + item + "' is not n:len");
    }
    out.push_back({n, len});
  }
  return out;
}

}  // namespace hogkit::bench
