#include "cubefree/morphism.hpp"

#include <array>
#include <utility>

#include "cubefree/thue_morse.hpp"

namespace cubefree {

Morphism::Morphism(Word image_a, Word image_b)
    : image_a_(std::move(image_a)), image_b_(std::move(image_b)) {
  if (image_a_.empty() || image_b_.empty()) {
    throw DomainError("morphism images must be nonempty");
  }
}

Morphism Morphism::parse(std::string_view literal) {
  const auto comma = literal.find(',');
  if (comma == std::string_view::npos) {
    throw UsageError("morphism literal must look like a=<word>,b=<word>");
  }
  const auto left = literal.substr(0, comma);
  const auto right = literal.substr(comma + 1);
  if (!left.starts_with("a=") || !right.starts_with("b=")) {
    throw UsageError("morphism literal must look like a=<word>,b=<word>");
  }
  return Morphism(Word::parse(left.substr(2)), Word::parse(right.substr(2)));
}

std::string Morphism::to_string() const {
  return "a=" + image_a_.str() + ",b=" + image_b_.str();
}

Word apply(const Morphism& m, const Word& w) {
  std::string raw;
  if (m.uniform()) raw.reserve(w.size() * m.image_a().size());
  for (char c : w.view()) raw += m.image(static_cast<Letter>(c)).view();
  return word_from_trusted(std::move(raw));
}

Word rename(const Word& w) {
  std::string raw(w.view());
  for (char& c : raw) c = c == 'a' ? 'b' : 'a';
  return word_from_trusted(std::move(raw));
}

const Word& cube_free_test_word() {
  static const Word word = Word::parse("aabbababbabbaabaababaabb");
  return word;
}

bool is_cube_free_morphism(const Morphism& m) {
  return is_cube_free(apply(m, cube_free_test_word())).cube_free;
}

const Morphism& theta() {
  static const Morphism m(Word::parse("ab"), Word::parse("ba"));
  return m;
}

namespace {

struct BlockSpec {
  unsigned order;
  bool same;  // block of the expanded letter itself, or of its complement
};

// psi(x) as a product of Thue-Morse blocks of x (same) and of x-bar.
constexpr std::array<BlockSpec, 15> kPsiBlocks{{
    {4, true},  {2, true},  {2, false}, {2, true},  {4, false},
    {2, false}, {2, true},  {4, false}, {2, false}, {2, true},
    {2, false}, {4, true},  {2, true},  {2, false}, {2, true},
}};

Word expand_psi(Letter x) {
  Word out;
  for (const auto& spec : kPsiBlocks) out += block(spec.order, spec.same ? x : complement(x));
  return out;
}

}  // namespace

const Morphism& psi() {
  static const Morphism m(expand_psi(Letter::a), expand_psi(Letter::b));
  return m;
}

const Morphism& builtin_morphism(std::string_view name) {
  if (name == "theta") return theta();
  if (name == "psi") return psi();
  throw UsageError("unknown builtin morphism '" + std::string(name) + "' (expected theta or psi)");
}

}  // namespace cubefree
