#pragma once

#include <string>
#include <string_view>

#include "cubefree/word.hpp"

namespace cubefree {

/// Binary morphism given by the images of a and b (both nonempty).
class Morphism {
 public:
  Morphism(Word image_a, Word image_b);

  const Word& image(Letter x) const { return x == Letter::a ? image_a_ : image_b_; }
  const Word& image_a() const { return image_a_; }
  const Word& image_b() const { return image_b_; }
  bool uniform() const { return image_a_.size() == image_b_.size(); }

  /// "a=<word>,b=<word>".
  static Morphism parse(std::string_view literal);
  std::string to_string() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Word image_a_;
  Word image_b_;
};

Word apply(const Morphism& m, const Word& w);

/// Letterwise complement.
Word rename(const Word& w);

/// The 24-letter test word: a binary morphism is cube-free iff its image of
/// this word is.
const Word& cube_free_test_word();

bool is_cube_free_morphism(const Morphism& m);

/// theta: a -> ab, b -> ba.
const Morphism& theta();

/// The 108-uniform cube-free morphism generating the buffer stream, expanded
/// from its block formula.
const Morphism& psi();

/// "theta" or "psi"; anything else is a UsageError.
const Morphism& builtin_morphism(std::string_view name);

}  // namespace cubefree
