#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hogkit::generate {

/// Letter k of a sigma-letter alphabet: 'a'.. for sigma <= 26, raw bytes
/// 0..sigma-1 otherwise.
char letter(unsigned k, unsigned sigma);

/// `n` reads of exactly `length` uniform letters. Not deduplicated.
std::vector<std::string> random_reads(std::size_t n, std::size_t length, unsigned sigma, std::uint64_t seed);

/// Between 1 and `max_n` strings, each of length 1..`max_len`.
std::vector<std::string> random_instance(std::size_t max_n, std::size_t max_len, unsigned sigma,
                                         std::mt19937_64& rng);

/// `n` distinct strings of length `length` that all begin and end with the
/// same border of length length/4, so every ordered pair overlaps. Equal
/// lengths make the family factor-free.
std::vector<std::string> overlap_dense(std::size_t n, std::size_t length, std::uint64_t seed);

/// a b^i a for i = 1..n: every ordered pair overlaps in "a".
std::vector<std::string> border_family(std::size_t n);

}  // namespace hogkit::generate
