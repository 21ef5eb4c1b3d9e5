#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cubefree/word.hpp"

namespace cubefree {

/// A letter written relative to the polarity letter x of the current
/// 32-iteration block: x itself or its complement.
enum class Polarity : std::uint8_t { x, x_bar };

constexpr Letter instantiate(Polarity p, Letter x) noexcept {
  return p == Polarity::x ? x : complement(x);
}

/// Thue-Morse block T_order of polarity x or x-bar.
struct BlockSpec {
  unsigned order = 0;
  Polarity polarity = Polarity::x;
  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

using BlockTemplate = std::vector<BlockSpec>;
using LetterPattern = std::vector<Polarity>;

Word instantiate(const BlockTemplate& blocks, Letter x);
Word instantiate(const LetterPattern& letters, Letter x);

/// Which half of a schedule applies to a block: the current letter of the
/// b-Thue-Morse word equals the previous one, or differs from it.
enum class Branch : std::uint8_t { equal, not_equal };

/// Constraint on the last letters of a buffer word: it must not end with
/// `letter`, nor (when present) with `block`.
struct EndProhibition {
  Polarity letter = Polarity::x;
  std::optional<BlockSpec> block;
  friend bool operator==(const EndProhibition&, const EndProhibition&) = default;
};

/// One row of the 32-iteration buffer schedule. Row `offset` carries the
/// buffer inserted at iteration k+offset (the word following the previous
/// iterate) and, in `start`, the prohibition enacted at the latest nontrivial
/// iteration before it: the buffer must not begin with that pattern.
/// Offsets missing from the table are trivial iterations with an empty buffer.
struct ScheduleRow {
  unsigned offset = 0;
  Branch branch = Branch::not_equal;
  LetterPattern start;
  EndProhibition end;
  BlockTemplate suffix;
  /// Longer variant borrowing the first 2-block of the next block's image;
  /// used when the next block repeats the current letter.
  std::optional<BlockTemplate> alt_suffix;
};

/// One row of the final-buffer table used when completing an iterate to a
/// left premaximal word. Rows with empty cells carry no data.
struct FinalRow {
  unsigned offset = 0;
  Branch branch = Branch::not_equal;
  std::optional<LetterPattern> start;
  std::optional<LetterPattern> final_suffix;
};

std::span<const ScheduleRow> table1();
std::span<const FinalRow> table2();

const ScheduleRow* find_schedule_row(unsigned offset, Branch branch);
const FinalRow* find_final_row(unsigned offset, Branch branch);

}  // namespace cubefree
