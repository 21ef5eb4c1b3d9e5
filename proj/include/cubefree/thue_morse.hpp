#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <set>

#include "cubefree/word.hpp"

namespace cubefree {

/// i-th letter (0-based) of the right-infinite Thue-Morse word starting with x.
constexpr Letter tm_letter(Letter x, std::uint64_t i) noexcept {
  return (__builtin_popcountll(i) & 1) ? complement(x) : x;
}

/// theta^n(x), of length 2^n.
Word block(unsigned n, Letter x);

/// First len letters of the Thue-Morse word starting with x.
Word tm_prefix(Letter x, std::size_t len);

/// Letter at position i of the left-infinite reversed word, positions counted
/// from the right starting at 0. Position i carries the (i+1)-th letter of the
/// a-word, so the context read leftwards from position 1 is "abb", "babb", ...
constexpr Letter rev_tm_letter(std::uint64_t i) noexcept { return tm_letter(Letter::a, i); }

/// Positions k..1 of the reversed word, read left to right.
Word rev_tm_context(std::size_t k);

/// Positions n and n-1 of the reversed word carry the same letter.
bool coincides(std::uint64_t n);

/// n = m * 2^k with m and k both odd.
bool is_odd_times_odd_power_of_two(std::uint64_t n);

/// { n in [1, upper] : coincides(n) }.
std::set<std::uint64_t> trivial_iteration_set(std::uint64_t upper);

/// Thread-safe, append-only cache of a Thue-Morse prefix used for factor
/// membership queries.
class TMOracle {
 public:
  TMOracle() = default;

  /// Whether w occurs in the Thue-Morse word.
  bool is_factor(const Word& w) const;

  /// Length of the longest factor of w that is a Thue-Morse factor.
  std::size_t longest_factor_len(const Word& w) const;

  std::size_t cached_length() const;

  /// Process-wide instance.
  static const TMOracle& shared();

 private:
  std::shared_ptr<const std::string> prefix_at_least(std::size_t len) const;

  mutable std::mutex mutex_;
  mutable std::shared_ptr<const std::string> cache_;
};

bool is_tm_factor(const Word& w);
std::size_t longest_tm_factor_len(const Word& w);

}  // namespace cubefree
