#include "cubefree/thue_morse.hpp"

#include <algorithm>
#include <bit>

namespace cubefree {

Word block(unsigned n, Letter x) { return tm_prefix(x, std::size_t{1} << n); }

Word tm_prefix(Letter x, std::size_t len) {
  std::string raw(len, 'a');
  for (std::size_t i = 0; i < len; ++i) raw[i] = to_char(tm_letter(x, i));
  return word_from_trusted(std::move(raw));
}

Word rev_tm_context(std::size_t k) {
  std::string raw(k, 'a');
  for (std::size_t i = 0; i < k; ++i) raw[i] = to_char(rev_tm_letter(k - i));
  return word_from_trusted(std::move(raw));
}

bool coincides(std::uint64_t n) {
  if (n == 0) throw DomainError("coincides is defined for n >= 1");
  return rev_tm_letter(n) == rev_tm_letter(n - 1);
}

bool is_odd_times_odd_power_of_two(std::uint64_t n) {
  if (n == 0) return false;
  return (std::countr_zero(n) & 1) == 1;
}

std::set<std::uint64_t> trivial_iteration_set(std::uint64_t upper) {
  std::set<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= upper; ++n) {
    if (coincides(n)) out.insert(n);
  }
  return out;
}

namespace {

// Every factor of length L <= 2^m sits inside theta^m(cd) for some pair cd,
// and all four pairs occur among the first 8 letters; so the first
// 8 * 2^m letters contain every factor of length L.
std::size_t covering_prefix_length(std::size_t len) {
  return std::max<std::size_t>(4096, 8 * std::bit_ceil(std::max<std::size_t>(len, 1)));
}

}  // namespace

std::shared_ptr<const std::string> TMOracle::prefix_at_least(std::size_t len) const {
  std::lock_guard lock(mutex_);
  if (!cache_ || cache_->size() < len) {
    std::size_t target = cache_ ? cache_->size() : 4096;
    while (target < len) target *= 2;
    cache_ = std::make_shared<const std::string>(tm_prefix(Letter::a, target).str());
  }
  return cache_;
}

bool TMOracle::is_factor(const Word& w) const {
  if (w.empty()) return true;
  const auto prefix = prefix_at_least(covering_prefix_length(w.size()));
  return prefix->find(w.view()) != std::string::npos;
}

std::size_t TMOracle::longest_factor_len(const Word& w) const {
  const std::string_view s = w.view();
  std::size_t best = 0;
  std::size_t start = 0;
  for (std::size_t end = 0; end < s.size(); ++end) {
    // Thue-Morse factors are closed under taking factors, so the window only
    // ever needs to shrink from the left.
    while (start <= end) {
      const auto prefix = prefix_at_least(covering_prefix_length(end - start + 1));
      if (prefix->find(s.substr(start, end - start + 1)) != std::string::npos) break;
      ++start;
    }
    best = std::max(best, end + 1 - start);
  }
  return best;
}

std::size_t TMOracle::cached_length() const {
  std::lock_guard lock(mutex_);
  return cache_ ? cache_->size() : 0;
}

const TMOracle& TMOracle::shared() {
  static const TMOracle oracle;
  return oracle;
}

bool is_tm_factor(const Word& w) { return TMOracle::shared().is_factor(w); }

std::size_t longest_tm_factor_len(const Word& w) {
  return TMOracle::shared().longest_factor_len(w);
}

}  // namespace cubefree
