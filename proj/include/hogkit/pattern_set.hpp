#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hogkit/types.hpp"

namespace hogkit {

enum class InputFormat { lines, fasta };

/// Reads raw patterns from a stream.
///
/// `lines`: one pattern per '\n'-terminated line, empty lines skipped.
/// `fasta`: '>' header lines start records, sequence lines are concatenated.
/// With no format given, a leading '>' selects fasta. Bytes are taken
/// verbatim; no '\r' stripping or case folding is done.
std::vector<std::string> load_patterns(std::istream& in, std::optional<InputFormat> format = std::nullopt);

std::optional<InputFormat> parse_input_format(std::string_view name);

enum class ValidationPolicy { strict, drop_contained };

std::optional<ValidationPolicy> parse_validation_policy(std::string_view name);

struct ValidatedPatterns;

/// Validated, immutable set of non-empty, distinct, factor-free patterns.
///
/// Copies share the underlying storage.
class PatternSet {
 public:
  PatternSet() = default;

  std::size_t size() const noexcept { return data_ ? data_->patterns.size() : 0; }
  bool empty() const noexcept { return size() == 0; }
  /// Sum of pattern lengths.
  std::size_t total_length() const noexcept { return data_ ? data_->total_length : 0; }

  std::string_view operator[](PatternIndex i) const { return data_->patterns[i]; }
  std::span<const std::string> patterns() const noexcept {
    return data_ ? std::span<const std::string>(data_->patterns) : std::span<const std::string>();
  }

  auto begin() const { return patterns().begin(); }
  auto end() const { return patterns().end(); }

  friend bool operator==(const PatternSet& a, const PatternSet& b) {
    return a.data_ == b.data_ || std::equal(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  struct Data {
    std::vector<std::string> patterns;
    std::size_t total_length = 0;
  };

  explicit PatternSet(std::vector<std::string> patterns);

  std::shared_ptr<const Data> data_;

  friend ValidatedPatterns validate(std::vector<std::string> raw, ValidationPolicy policy);
};

struct DroppedPattern {
  enum class Reason { duplicate, contained };

  std::size_t input_index;
  std::string pattern;
  Reason reason;
};

struct ValidatedPatterns {
  PatternSet set;
  /// Patterns removed under `drop_contained`, in input order.
  std::vector<DroppedPattern> dropped;
};

/// Checks the PatternSet invariants.
///
/// `strict` throws ValidationError on the first violation (in input order).
/// `drop_contained` removes later duplicates and every pattern that occurs
/// inside another one. Empty patterns and empty results are errors under
/// both policies. Runs in O(||P||) expected time.
ValidatedPatterns validate(std::vector<std::string> raw, ValidationPolicy policy);

}  // namespace hogkit
