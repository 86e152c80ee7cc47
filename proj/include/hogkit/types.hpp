#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hogkit {

/// Dense index into a node arena. 0 is always the root (the empty string).
using NodeId = std::uint32_t;
/// Index of a pattern in a PatternSet.
using PatternIndex = std::uint32_t;

inline constexpr NodeId kRoot = 0;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr PatternIndex kNoPattern = std::numeric_limits<PatternIndex>::max();

/// Input could not be read or parsed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pattern set violates one of the PatternSet invariants.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind { EmptyPattern, DuplicatePattern, ContainedPattern, EmptySet };

  ValidationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// An internal invariant of the construction pipeline was breached.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hogkit
