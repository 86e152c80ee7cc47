#include "hogkit/generate.hpp"

#include <stdexcept>
#include <unordered_set>

namespace hogkit::generate {

namespace {

// Plain modulo keeps the sequence identical across standard libraries.
std::string random_string(std::size_t length, unsigned sigma, std::mt19937_64& rng) {
  std::string s(length, '\0');
  for (auto& c : s) c = letter(static_cast<unsigned>(rng() % sigma), sigma);
  return s;
}

}  // namespace

char letter(unsigned k, unsigned sigma) {
  return sigma <= 26 ? static_cast<char>('a' + k) : static_cast<char>(static_cast<unsigned char>(k));
}

std::vector<std::string> random_reads(std::size_t n, std::size_t length, unsigned sigma, std::uint64_t seed) {
  if (sigma == 0 || sigma > 256) throw std::invalid_argument("alphabet size must be in 1..256");
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_string(length, sigma, rng));
  return out;
}

std::vector<std::string> random_instance(std::size_t max_n, std::size_t max_len, unsigned sigma,
                                         std::mt19937_64& rng) {
  if (sigma == 0 || sigma > 256) throw std::invalid_argument("alphabet size must be in 1..256");
  const std::size_t n = 1 + rng() % max_n;
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_string(1 + rng() % max_len, sigma, rng));
  return out;
}

std::vector<std::string> overlap_dense(std::size_t n, std::size_t length, std::uint64_t seed) {
  const std::size_t border = length / 4;
  if (length < 2 * border + 1) throw std::invalid_argument("length too short for the overlap-dense family");
  std::mt19937_64 rng(seed);
  const auto b = random_string(border, 4, rng);
  std::unordered_set<std::string> seen;
  std::vector<std::string> out;
  out.reserve(n);
  std::size_t attempts = 0;
  while (out.size() < n) {
    if (++attempts > 100 * n + 1000) throw std::invalid_argument("cannot draw that many distinct strings");
    auto s = b + random_string(length - 2 * border, 4, rng) + b;
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> border_family(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back("a" + std::string(i, 'b') + "a");
  return out;
}

}  // namespace hogkit::generate
