#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubefree/explorer.hpp"
#include "cubefree/schedule.hpp"
#include "cubefree/word.hpp"

namespace cubefree {

/// Absolute iteration handled by offset 0 of the first schedule block.
inline constexpr std::uint64_t kSchedulePhase = 0;

/// Default bound on materialized word length, overridable through the
/// CUBEFREE_MAX_BYTES environment variable.
inline constexpr std::uint64_t kDefaultMaxBytes = 100'000'000;

/// CUBEFREE_MAX_BYTES if set (UsageError when malformed), else the default.
std::uint64_t max_bytes_from_env();

struct BuildOptions {
  std::uint64_t max_bytes = max_bytes_from_env();
};

const Word& initial_word();  // "aabaaba"

/// psi applied to the first num_letters letters of the Thue-Morse word
/// starting with b.
Word s_stream(std::size_t num_letters);

/// Polarity letter and branch of schedule block j.
Letter block_letter(std::uint64_t j);
Branch block_branch(std::uint64_t j);

/// Schedule row governing iteration n, or nullptr when the iteration is
/// trivial.
const ScheduleRow* schedule_row(std::uint64_t n);

/// Buffer S_m for m >= -1 (row m+1 of the schedule, empty when absent).
Word buffer(std::int64_t m);

/// S_{-1}, S_0, ..., S_iterations. Throws IntegrityError if their
/// concatenation is not a prefix of the psi stream.
std::vector<std::pair<std::int64_t, Word>> segment(std::size_t iterations);

/// State after iteration n. The prohibition x (one letter, or three inside a
/// trick window) and P, P_prime are present only when iteration n+1 is
/// nontrivial; then W_{n+1} = W_n S (P_prime W_n S)^2.
struct IterationRecord {
  std::size_t n = 0;
  bool base = false;
  bool trivial = false;  // W_n = W_{n-1}
  Word X;                // fixed left context of W_n
  Word S;
  std::optional<Word> x;
  Word P;        // Thue-Morse left extension of X with |P| = |P_prime|
  Word P_prime;  // x X
  std::uint64_t w_len = 0;
  std::uint64_t p = 0;  // |X W S| + |x|, the period of V_n
  std::optional<unsigned> row_offset;
  std::optional<Branch> row_branch;
};

struct ConstructionTrace {
  std::vector<IterationRecord> records;  // 0..n
  /// W_k for every k where the word changed; trivial iterations share.
  std::map<std::size_t, Word> words;
  Word s_prime;  // S_{-1} S_0 ... S_n

  std::size_t last() const { return records.size() - 1; }
  const Word& word(std::size_t k) const;
  const Word& result() const { return word(last()); }
};

/// Throws ResourceError if some W_k would exceed options.max_bytes, and
/// IntegrityError if the schedule disagrees with the construction.
ConstructionTrace build_w(std::size_t n, const BuildOptions& options = {});

/// Throws DomainError when the record carries no prohibition.
const Word& prohibited_letter(const IterationRecord& record);

/// V_n = (X_n W_n S_n x_n)^3; requires a prohibition at n.
Word v_word(const ConstructionTrace& trace, std::size_t n);

struct IterationCertificate {
  std::size_t n = 0;
  bool xw_cube_free = false;
  FixedContext first_branch;
  bool fixed_at_recorded = false;  // is_fixed_left_context(W_n, X_n)
  bool x_is_tm_context = false;
  bool long_enough = false;  // |X_n| >= n
  bool whitelisted = false;  // |X_n| = n-1 at the first step of a trick window
  std::optional<bool> v_proper_cube_free;
  std::optional<std::size_t> s_prime_occurrences;  // occurrences of S'_n in V_n
  std::optional<bool> unit_cube_free;               // X_n W_n S_n x_n cube-free
  bool s_prime_prefix = false;

  bool ok() const;
};

IterationCertificate certify_iteration(const ConstructionTrace& trace, std::size_t n);

/// Why n can or cannot serve the final construction steps.
struct EligibilityEntry {
  std::size_t n = 0;
  std::size_t x_len = 0;
  std::size_t next_x_len = 0;
  bool left = false;
  bool two_sided = false;
  std::vector<std::string> reasons;  // empty when both hold
};

std::vector<EligibilityEntry> eligibility_scan(const ConstructionTrace& trace);
std::string eligibility_json(const std::vector<EligibilityEntry>& entries);

enum class FinalBufferSource { table, tm_extension };
std::string to_string(FinalBufferSource source);

struct PremaxLeft {
  std::size_t n = 0;
  Word word;  // W_{n+1} S (P W_{n+1} S)^2
  Word X;
  Word P;
  Word S_bar;
  FinalBufferSource source = FinalBufferSource::table;
};

/// Requires |X_n| = n and |X_{n+1}| >= n+1 (DomainError naming the actual
/// lengths otherwise).
PremaxLeft build_premax_left(std::size_t n, const BuildOptions& options = {});

struct PremaxTwoSided {
  std::size_t n = 0;
  unsigned m = 0;
  Letter x = Letter::a;  // the central block is T_m of the complement of x
  Word X;
  Word half;  // W_{n+1} S_{n+1} S_{n+2} (P_n W_{n+1} S_{n+1} S_{n+2})^2
  Word word;  // half T_m reverse(half)
};

/// Smallest even m with |X_n half| < 2^(m-2).
unsigned minimal_block_order(std::size_t x_half_len);

/// Throws DomainError for an ineligible n and UsageError for an odd or too
/// small m.
PremaxTwoSided build_premax_two_sided(std::size_t n, std::optional<unsigned> m = std::nullopt,
                                      const BuildOptions& options = {});

/// Least-squares base b of |W_n| ~ c * b^n over records 3..last.
double fitted_growth_base(const ConstructionTrace& trace);

/// Records plus words up to word_cap letters; longer words are stored as
/// iteration recipes over earlier words.
std::string trace_json(const ConstructionTrace& trace, std::size_t word_cap);
/// Re-expands W_n from trace_json output.
Word expand_word(std::string_view json_text, std::size_t n);

}  // namespace cubefree
