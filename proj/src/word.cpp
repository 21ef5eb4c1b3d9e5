#include "cubefree/word.hpp"

#include <algorithm>
#include <limits>

namespace cubefree {

Word Word::parse(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'a' && text[i] != 'b') throw ParseError(i + 1, text[i]);
  }
  return Word(std::string(text));
}

Word word_from_trusted(std::string raw) { return Word(std::move(raw)); }

Letter Word::at(std::size_t pos) const {
  if (pos == 0 || pos > letters_.size()) {
    throw std::out_of_range("word position " + std::to_string(pos) + " outside 1.." +
                            std::to_string(letters_.size()));
  }
  return static_cast<Letter>(letters_[pos - 1]);
}

Word Word::factor(std::size_t i, std::size_t j) const {
  if (j < i) return {};
  if (i == 0 || j > letters_.size()) {
    throw std::out_of_range("factor " + std::to_string(i) + ".." + std::to_string(j) +
                            " outside 1.." + std::to_string(letters_.size()));
  }
  return Word(letters_.substr(i - 1, j - i + 1));
}

Word Word::prefix(std::size_t len) const {
  return Word(letters_.substr(0, std::min(len, letters_.size())));
}

Word Word::suffix(std::size_t len) const {
  len = std::min(len, letters_.size());
  return Word(letters_.substr(letters_.size() - len));
}

Word reverse(const Word& w) {
  std::string raw(w.view().rbegin(), w.view().rend());
  return word_from_trusted(std::move(raw));
}

namespace detail {

std::vector<std::uint32_t> z_function(std::string_view s) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> z(n, 0);
  if (n == 0) return z;
  z[0] = static_cast<std::uint32_t>(n);
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = 0;
    if (i < r) k = std::min<std::size_t>(r - i, z[i - l]);
    while (i + k < n && s[k] == s[i + k]) ++k;
    z[i] = static_cast<std::uint32_t>(k);
    if (i + k > r) {
      l = i;
      r = i + k;
    }
  }
  return z;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Best {
  std::size_t start = kNone;
  std::size_t period = 0;

  void offer(std::size_t s, std::size_t p) {
    if (s < start || (s == start && p < period)) {
      start = s;
      period = p;
    }
  }
};

// Below this size the quadratic run counter beats the Z-array bookkeeping.
constexpr std::size_t kLeafSize = 48;

void scan_leaf(std::string_view s, std::size_t lo, std::size_t hi, Power power, Best& best) {
  for (std::size_t p = 1; lo + p < hi; ++p) {
    const std::size_t need = required_extent(power, p);
    if (p + need > hi - lo) break;
    std::size_t run = 0;
    for (std::size_t k = lo; k + p < hi; ++k) {
      if (s[k] == s[k + p]) {
        if (++run >= need) {
          best.offer(k + 1 - need, p);
          break;
        }
      } else {
        run = 0;
      }
    }
  }
}

// Repetitions inside [lo, hi) that contain both s[mid-1] and s[mid]. Each
// such repetition has its periodic stretch passing through mid-p or mid, so
// two longest-common-extension probes per period suffice.
void scan_cross(std::string_view s, std::size_t lo, std::size_t mid, std::size_t hi,
                Power power, Best& best) {
  const std::size_t nl = mid - lo;
  const std::size_t nr = hi - mid;
  const std::string_view right = s.substr(mid, nr);
  const std::string_view whole = s.substr(lo, hi - lo);

  std::string rev_left(s.rbegin() + static_cast<std::ptrdiff_t>(s.size() - mid),
                       s.rbegin() + static_cast<std::ptrdiff_t>(s.size() - lo));
  std::string rev_whole(s.rbegin() + static_cast<std::ptrdiff_t>(s.size() - hi),
                        s.rbegin() + static_cast<std::ptrdiff_t>(s.size() - lo));

  // Forward extension from mid-p against mid.
  std::string fwd;
  fwd.reserve(nr + 1 + whole.size());
  fwd.append(right).push_back('#');
  fwd.append(whole);
  const auto z_fwd = z_function(fwd);
  const auto z_right = z_function(right);
  const auto z_rev_left = z_function(rev_left);

  // Backward extension from mid-1 against mid+p-1.
  std::string bwd;
  bwd.reserve(nl + 1 + rev_whole.size());
  bwd.append(rev_left).push_back('#');
  bwd.append(rev_whole);
  const auto z_bwd = z_function(bwd);

  for (std::size_t p = 1; p <= nl; ++p) {
    const std::size_t need = required_extent(power, p);
    if (p + need > hi - lo) break;
    const std::size_t q = mid - p;
    const std::size_t forward = z_fwd[nr + 1 + (q - lo)];
    const std::size_t backward = p < nl ? z_rev_left[p] : 0;
    if (backward + forward >= need) best.offer(q - backward, p);
  }
  for (std::size_t p = 1; p < nr; ++p) {
    const std::size_t need = required_extent(power, p);
    if (p + need > hi - lo) break;
    const std::size_t forward = z_right[p];
    const std::size_t backward = z_bwd[nl + 1 + (nr - p)];
    if (backward + forward >= need) best.offer(mid - backward, p);
  }
}

void scan(std::string_view s, std::size_t lo, std::size_t hi, Power power, Best& best) {
  const std::size_t n = hi - lo;
  if (n < 2 || best.start < lo) return;
  if (n <= kLeafSize) {
    scan_leaf(s, lo, hi, power, best);
    return;
  }
  const std::size_t mid = lo + n / 2;
  scan(s, lo, mid, power, best);
  // Starts found in the right half are >= mid and cannot win.
  if (best.start == kNone || best.start >= mid) scan(s, mid, hi, power, best);
  scan_cross(s, lo, mid, hi, power, best);
}

}  // namespace

std::optional<Repetition> find_repetition(std::string_view s, Power power) {
  Best best;
  scan(s, 0, s.size(), power, best);
  if (best.start == kNone) return std::nullopt;
  return Repetition{best.start, best.period};
}

std::optional<Repetition> naive_find_repetition(std::string_view s, Power power) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 1; i + p + required_extent(power, p) <= n; ++p) {
      const std::size_t need = required_extent(power, p);
      bool periodic = true;
      for (std::size_t j = 0; j < need && periodic; ++j) periodic = s[i + j] == s[i + j + p];
      if (periodic) return Repetition{i, p};
    }
  }
  return std::nullopt;
}

bool has_prefix_repetition(std::string_view s, Power power) {
  const auto z = z_function(s);
  for (std::size_t p = 1; p < s.size(); ++p) {
    if (z[p] >= required_extent(power, p)) return true;
  }
  return false;
}

bool has_suffix_repetition(std::string_view s, Power power) {
  const std::string rev(s.rbegin(), s.rend());
  return has_prefix_repetition(rev, power);
}

}  // namespace detail

namespace {

std::vector<std::size_t> prefix_function(std::string_view s) {
  std::vector<std::size_t> pi(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  return pi;
}

RepetitionReport to_report(const std::optional<Repetition>& rep) {
  if (!rep) return {};
  return {false, Repetition{rep->start + 1, rep->period}};
}

void require_cube_free_contract([[maybe_unused]] const Word& w) {
#ifdef CUBEFREE_CHECK_CONTRACTS
  if (detail::find_repetition(w.view(), Power::cube)) {
    throw ContractError("extension check requires a cube-free base word");
  }
#endif
}

}  // namespace

std::size_t min_period(const Word& w) {
  if (w.empty()) throw DomainError("min_period of the empty word");
  const auto pi = prefix_function(w.view());
  return w.size() - pi.back();
}

Rational exponent(const Word& w) {
  if (w.empty()) throw DomainError("exponent of the empty word");
  return Rational(static_cast<std::int64_t>(w.size()),
                  static_cast<std::int64_t>(min_period(w)));
}

Rational local_exponent(const Word& w) {
  if (w.empty()) throw DomainError("local exponent of the empty word");
  Rational best(1);
  const std::string_view s = w.view();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto pi = prefix_function(s.substr(i));
    for (std::size_t j = 0; j < pi.size(); ++j) {
      const auto len = static_cast<std::int64_t>(j + 1);
      const Rational e(len, len - static_cast<std::int64_t>(pi[j]));
      if (e > best) best = e;
    }
  }
  return best;
}

RepetitionReport is_cube_free(const Word& w) {
  return to_report(detail::find_repetition(w.view(), Power::cube));
}

RepetitionReport naive_cube_report(const Word& w) {
  return to_report(detail::naive_find_repetition(w.view(), Power::cube));
}

bool is_overlap_free(const Word& w) {
  return !detail::find_repetition(w.view(), Power::overlap).has_value();
}

bool extend_left_ok(Letter x, const Word& w) {
  require_cube_free_contract(w);
  return !detail::has_prefix_repetition((x + w).view(), Power::cube);
}

bool extend_right_ok(const Word& w, Letter x) {
  require_cube_free_contract(w);
  return !detail::has_suffix_repetition((w + x).view(), Power::cube);
}

bool check_proper_cube_free(const Word& w) {
  if (w.size() < 2) return true;
  const std::string_view s = w.view();
  return !detail::find_repetition(s.substr(0, s.size() - 1), Power::cube) &&
         !detail::find_repetition(s.substr(1), Power::cube);
}

}  // namespace cubefree
