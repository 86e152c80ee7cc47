#include <sstream>

#include "doctest.h"
#include "hogkit/oracle.hpp"
#include "hogkit/pattern_set.hpp"
#include "test_util.hpp"

using namespace hogkit;

namespace {

std::vector<std::string> load(const std::string& text, std::optional<InputFormat> format = std::nullopt) {
  std::istringstream in(text);
  return load_patterns(in, format);
}

ValidationError::Kind error_kind(std::vector<std::string> raw, ValidationPolicy policy) {
  try {
    validate(std::move(raw), policy);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("expected a ValidationError");
  return ValidationError::Kind::EmptySet;
}

// Keeps the first copy of each string that is not a proper substring of another.
std::vector<std::string> naive_maximal(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < raw.size() && keep; ++j) {
      if (raw[j] == raw[i]) {
        keep = j >= i;
      } else if (raw[j].find(raw[i]) != std::string::npos) {
        keep = false;
      }
    }
    if (keep) out.push_back(raw[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("load_patterns reads lines") {
  const auto raw = load("aabaa\naadbd\ndbdaa");
  REQUIRE(raw.size() == 3);
  CHECK(raw[2] == "dbdaa");
  CHECK(test::make_set(raw).total_length() == 15);

  CHECK(load("").empty());
  CHECK(load("ab\n\n\ncd\n") == std::vector<std::string>{"ab", "cd"});
}

TEST_CASE("load_patterns reads FASTA") {
  CHECK(load(">r1\naab\naa\n>r2\naadbd") == std::vector<std::string>{"aabaa", "aadbd"});
  CHECK(load(">r1\nac\n", InputFormat::fasta) == std::vector<std::string>{"ac"});
  // Explicit lines format keeps '>' lines as patterns.
  CHECK(load(">r1\nac\n", InputFormat::lines) == std::vector<std::string>{">r1", "ac"});
  CHECK_THROWS_AS(load(">r1\n>r2\nac\n"), IoError);
  CHECK_THROWS_AS(load(">r1\nac\n>r2\n"), IoError);
  CHECK_THROWS_AS(load("ac\n>r1\nac\n", InputFormat::fasta), IoError);
}

TEST_CASE("load_patterns keeps arbitrary bytes") {
  const std::string bytes{"\x01\xff\x80z", 4};
  const auto raw = load(bytes + "\n");
  REQUIRE(raw.size() == 1);
  CHECK(raw[0] == bytes);
}

TEST_CASE("validate strict") {
  const auto set = test::figure1();
  CHECK(set.size() == 3);
  CHECK(set.total_length() == 15);

  CHECK(error_kind({"ab", "ab"}, ValidationPolicy::strict) == ValidationError::Kind::DuplicatePattern);
  CHECK(error_kind({"ab", "xaby"}, ValidationPolicy::strict) == ValidationError::Kind::ContainedPattern);
  CHECK(error_kind({"abc", "ab"}, ValidationPolicy::strict) == ValidationError::Kind::ContainedPattern);
  CHECK(error_kind({"bc", "abc"}, ValidationPolicy::strict) == ValidationError::Kind::ContainedPattern);
  CHECK(error_kind({"ab", ""}, ValidationPolicy::strict) == ValidationError::Kind::EmptyPattern);
  CHECK(error_kind({"ab", ""}, ValidationPolicy::drop_contained) == ValidationError::Kind::EmptyPattern);
  CHECK(error_kind({}, ValidationPolicy::strict) == ValidationError::Kind::EmptySet);
}

TEST_CASE("validate drop_contained reports what it removes") {
  const auto result = validate({"ab", "xaby"}, ValidationPolicy::drop_contained);
  REQUIRE(result.set.size() == 1);
  CHECK(result.set[0] == "xaby");
  REQUIRE(result.dropped.size() == 1);
  CHECK(result.dropped[0].pattern == "ab");
  CHECK(result.dropped[0].input_index == 0);
  CHECK(result.dropped[0].reason == DroppedPattern::Reason::contained);

  const auto dups = validate({"cd", "ab", "cd", "b"}, ValidationPolicy::drop_contained);
  CHECK(std::vector<std::string>(dups.set.begin(), dups.set.end()) == std::vector<std::string>{"cd", "ab"});
  REQUIRE(dups.dropped.size() == 2);
  CHECK(dups.dropped[0].reason == DroppedPattern::Reason::duplicate);
  CHECK(dups.dropped[1].pattern == "b");
}

TEST_CASE("drop_contained matches the naive quadratic scan") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 500; ++rep) {
    auto raw = generate::random_instance(10, 8, 1 + rep % 3, rng);
    const auto expected = naive_maximal(raw);
    const auto first = validate(raw, ValidationPolicy::drop_contained).set;
    const auto again = validate(raw, ValidationPolicy::drop_contained).set;
    const std::vector<std::string> got(first.begin(), first.end());
    REQUIRE(got == expected);
    CHECK(first == again);
    CHECK(oracle::is_factor_free(first.patterns()));

    std::size_t total = 0;
    for (const auto& p : got) total += p.size();
    CHECK(first.total_length() == total);
    CHECK(first.size() <= first.total_length());
  }
}
