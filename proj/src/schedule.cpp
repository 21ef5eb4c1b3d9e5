#include "cubefree/schedule.hpp"

#include "cubefree/thue_morse.hpp"

namespace cubefree {

namespace {

constexpr Polarity x = Polarity::x;
constexpr Polarity xb = Polarity::x_bar;

constexpr BlockSpec T(unsigned order, Polarity p) { return {order, p}; }

EndProhibition end(Polarity letter) { return {letter, std::nullopt}; }
EndProhibition end(Polarity letter, BlockSpec block) { return {letter, block}; }

ScheduleRow row(unsigned offset, Branch branch, LetterPattern start, EndProhibition e,
                BlockTemplate suffix, std::optional<BlockTemplate> alt = std::nullopt) {
  return {offset, branch, std::move(start), e, std::move(suffix), std::move(alt)};
}

std::vector<ScheduleRow> make_table1() {
  constexpr auto ne = Branch::not_equal;
  constexpr auto eq = Branch::equal;
  return {
      row(0, ne, {xb}, end(xb), {T(2, x)}),
      row(2, ne, {x}, end(x), {T(2, xb), T(2, xb)}),
      row(4, ne, {xb}, end(xb), {T(2, x)}),
      row(5, ne, {xb}, end(x, T(2, xb)), {T(2, x), T(2, xb), T(1, x)}),
      row(6, ne, {x}, end(xb), {T(1, xb)}),
      row(8, ne, {x}, end(x), {T(2, xb)}),
      row(10, ne, {xb}, end(xb), {T(2, x), T(2, x)}),
      row(12, ne, {x}, end(x), {T(2, xb)}),
      row(13, ne, {x}, end(xb, T(2, x)), {T(2, xb), T(2, x), T(1, xb)}),
      row(14, ne, {xb}, end(x), {T(1, x)}),
      row(16, ne, {xb}, end(xb), {T(2, x)}),
      row(17, ne, {xb}, end(x), {T(1, x)}),
      row(18, ne, {x, x, xb}, end(xb), {T(1, xb)}),
      row(20, ne, {xb, xb, x}, end(x), {T(2, xb)}),
      row(21, ne, {x}, end(xb), {T(1, xb)}),
      row(22, ne, {xb, xb, x}, end(x), {T(1, x)}),
      row(24, ne, {x, x, xb}, end(xb), {T(2, x)}),
      row(26, ne, {x}, end(x), {T(2, xb)}),
      row(28, ne, {xb}, end(xb), {T(4, x)}),
      row(29, ne, {xb}, end(x, T(2, xb)), {T(2, x), T(2, xb), T(1, x)}),
      row(30, ne, {x}, end(xb), {T(1, xb)}, BlockTemplate{T(1, xb), T(2, x)}),

      row(0, eq, {x}, end(x), {T(2, xb)}),
      row(1, eq, {x}, end(xb), {T(1, xb)}),
      row(2, eq, {xb, xb, x}, end(x), {T(1, x)}),
      row(4, eq, {x, x, xb}, end(xb), {T(2, x)}),
      row(5, eq, {xb}, end(x), {T(1, x)}),
      row(6, eq, {x, x, xb}, end(xb), {T(1, xb)}),
      row(8, eq, {xb, xb, x}, end(x), {T(2, xb)}),
      row(10, eq, {xb}, end(xb), {T(2, x)}),
      row(12, eq, {x}, end(x), {T(4, xb)}),
      row(13, eq, {x}, end(xb, T(2, x)), {T(2, xb), T(2, x), T(1, xb)}),
      row(14, eq, {xb}, end(x), {T(1, x)}),
      row(16, eq, {xb}, end(xb), {T(2, x)}),
      row(17, eq, {xb}, end(x), {T(1, x)}),
      row(18, eq, {x, x, xb}, end(xb), {T(1, xb)}),
      row(20, eq, {xb, xb, x}, end(x), {T(2, xb)}),
      row(21, eq, {x}, end(xb), {T(1, xb)}),
      row(22, eq, {xb, xb, x}, end(x), {T(1, x)}),
      row(24, eq, {x, x, xb}, end(xb), {T(2, x)}),
      row(26, eq, {x}, end(x), {T(2, xb)}),
      row(28, eq, {xb}, end(xb), {T(4, x)}),
      row(29, eq, {xb}, end(x, T(2, xb)), {T(2, x), T(2, xb), T(1, x)}),
      row(30, eq, {x}, end(xb), {T(1, xb)}),
  };
}

FinalRow final_row(unsigned offset, Branch branch, LetterPattern start, LetterPattern suffix) {
  return {offset, branch, std::move(start), std::move(suffix)};
}

FinalRow blank_row(unsigned offset, Branch branch) {
  return {offset, branch, std::nullopt, std::nullopt};
}

std::vector<FinalRow> make_table2() {
  constexpr auto ne = Branch::not_equal;
  constexpr auto eq = Branch::equal;
  return {
      blank_row(0, ne),
      final_row(1, ne, {xb}, {x, xb}),
      final_row(3, ne, {x}, {xb}),
      final_row(4, ne, {x}, {}),
      final_row(5, ne, {xb}, {x, xb, xb, x}),
      final_row(7, ne, {xb}, {x, xb}),
      final_row(9, ne, {x}, {xb, x}),
      final_row(11, ne, {xb}, {x}),
      final_row(12, ne, {xb}, {}),
      final_row(13, ne, {x}, {}),
      final_row(15, ne, {x}, {xb}),
      final_row(16, ne, {x}, {}),
      final_row(18, ne, {x, x, xb}, {x, xb}),
      blank_row(19, ne),
      final_row(20, ne, {xb}, {}),
      final_row(23, ne, {xb, xb, x}, {xb, x}),
      final_row(25, ne, {xb}, {x, xb}),
      final_row(27, ne, {x}, {xb}),
      final_row(28, ne, {x}, {}),
      final_row(29, ne, {xb}, {}),
      final_row(31, ne, {xb}, {x}),

      final_row(0, eq, {xb}, {}),
      blank_row(1, eq),
      final_row(3, eq, {xb, xb, x}, {xb}),
      final_row(4, eq, {x}, {}),
      blank_row(5, eq),
      final_row(7, eq, {x, x, xb}, {x, xb}),
      final_row(9, eq, {x}, {xb, x}),
      final_row(11, eq, {xb}, {x}),
      final_row(12, eq, {xb}, {}),
      final_row(13, eq, {x}, {}),
      final_row(15, eq, {x}, {xb}),
      final_row(16, eq, {x}, {}),
      blank_row(18, eq),
      final_row(19, eq, {x, x, xb}, {x}),
      final_row(20, eq, {xb}, {}),
      final_row(23, eq, {xb, xb, x}, {xb, x}),
      final_row(25, eq, {xb}, {x, xb}),
      final_row(27, eq, {x}, {xb}),
      final_row(28, eq, {x}, {}),
      final_row(29, eq, {xb}, {}),
      final_row(31, eq, {xb}, {x, xb}),
  };
}

}  // namespace

Word instantiate(const BlockTemplate& blocks, Letter letter) {
  Word out;
  for (const auto& b : blocks) out += block(b.order, instantiate(b.polarity, letter));
  return out;
}

Word instantiate(const LetterPattern& letters, Letter letter) {
  Word out;
  for (Polarity p : letters) out.push_back(instantiate(p, letter));
  return out;
}

std::span<const ScheduleRow> table1() {
  static const std::vector<ScheduleRow> rows = make_table1();
  return rows;
}

std::span<const FinalRow> table2() {
  static const std::vector<FinalRow> rows = make_table2();
  return rows;
}

const ScheduleRow* find_schedule_row(unsigned offset, Branch branch) {
  for (const auto& r : table1()) {
    if (r.offset == offset && r.branch == branch) return &r;
  }
  return nullptr;
}

const FinalRow* find_final_row(unsigned offset, Branch branch) {
  for (const auto& r : table2()) {
    if (r.offset == offset && r.branch == branch) return &r;
  }
  return nullptr;
}

}  // namespace cubefree
