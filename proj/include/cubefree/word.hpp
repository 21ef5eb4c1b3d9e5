#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "cubefree/errors.hpp"

namespace cubefree {

enum class Letter : char { a = 'a', b = 'b' };

constexpr Letter complement(Letter x) noexcept {
  return x == Letter::a ? Letter::b : Letter::a;
}

constexpr char to_char(Letter x) noexcept { return static_cast<char>(x); }

/// Exact exponents; "exponent >= 3" is never decided in floating point.
using Rational = boost::rational<std::int64_t>;

/// Finite word over {a, b}.
///
/// Letters are addressed 1-based through at() and factor(); view() exposes
/// the raw 0-based characters for the string algorithms.
class Word {
 public:
  Word() = default;

  /// Throws ParseError naming the 1-based position of the first bad character.
  static Word parse(std::string_view text);

  static Word repeat(Letter x, std::size_t count) {
    Word w;
    w.letters_.assign(count, to_char(x));
    return w;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Letter at(std::size_t pos) const;
  Letter front() const { return at(1); }
  Letter back() const { return at(size()); }

  /// W(i..j), 1-based and inclusive; empty when j < i.
  Word factor(std::size_t i, std::size_t j) const;
  Word prefix(std::size_t len) const;
  Word suffix(std::size_t len) const;

  std::string_view view() const noexcept { return letters_; }
  const std::string& str() const noexcept { return letters_; }

  void push_back(Letter x) { letters_.push_back(to_char(x)); }
  void reserve(std::size_t n) { letters_.reserve(n); }

  Word& operator+=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend Word operator+(Letter x, const Word& w) {
    Word out;
    out.letters_.reserve(w.size() + 1);
    out.letters_.push_back(to_char(x));
    out.letters_ += w.letters_;
    return out;
  }
  friend Word operator+(Word w, Letter x) {
    w.push_back(x);
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.letters_;
  }

 private:
  explicit Word(std::string raw) : letters_(std::move(raw)) {}
  friend Word word_from_trusted(std::string raw);

  std::string letters_;
};

/// Wraps characters already known to be over {a, b}.
Word word_from_trusted(std::string raw);

Word reverse(const Word& w);

/// Repetition thresholds supported by the checkers: exponent >= 2, > 2, >= 3.
enum class Power { square, overlap, cube };

/// A repetition of period `period` starting at 1-based `start`; for cubes the
/// factor W(start .. start+3*period-1).
struct Repetition {
  std::size_t start = 0;
  std::size_t period = 0;
  friend bool operator==(const Repetition&, const Repetition&) = default;
};

struct RepetitionReport {
  bool cube_free = true;
  std::optional<Repetition> witness;
};

/// Smallest period. Throws DomainError on the empty word.
std::size_t min_period(const Word& w);

/// |w| / min_period(w).
Rational exponent(const Word& w);

/// Maximum exponent over all nonempty factors.
Rational local_exponent(const Word& w);

/// O(n log n) check; the witness is the leftmost, then shortest-period cube.
RepetitionReport is_cube_free(const Word& w);

/// Quadratic-to-cubic reference scan with the same witness rule.
RepetitionReport naive_cube_report(const Word& w);

bool is_overlap_free(const Word& w);

/// Whether x.w is cube-free, given that w is. Only prefixes of x.w are
/// inspected. Throws ContractError if w is not cube-free and contract
/// checking is compiled in.
bool extend_left_ok(Letter x, const Word& w);
bool extend_right_ok(const Word& w, Letter x);

/// No factor other than w itself has exponent >= 3.
bool check_proper_cube_free(const Word& w);

namespace detail {

/// Z-array: z[i] = lcp(s, s[i..]); z[0] = |s|.
std::vector<std::uint32_t> z_function(std::string_view s);

/// Smallest extent of equal letters at distance p needed for a repetition of
/// period p under the given threshold (the repetition then has length
/// p + extent).
constexpr std::size_t required_extent(Power power, std::size_t p) noexcept {
  switch (power) {
    case Power::square:
      return p;
    case Power::overlap:
      return p + 1;
    case Power::cube:
      return 2 * p;
  }
  return 2 * p;
}

/// Divide-and-conquer scan; 0-based leftmost-then-shortest repetition.
std::optional<Repetition> find_repetition(std::string_view s, Power power);

/// Definition-level scan, for cross-checking find_repetition.
std::optional<Repetition> naive_find_repetition(std::string_view s, Power power);

bool has_prefix_repetition(std::string_view s, Power power);
bool has_suffix_repetition(std::string_view s, Power power);

}  // namespace detail

}  // namespace cubefree
