// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cubefree/construction.hpp"
#include "cubefree/explorer.hpp"
#include "cubefree/morphism.hpp"
#include "cubefree/thue_morse.hpp"
#include "oracles.hpp"

using namespace cubefree;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
  bool blocked = false;
};

// Records the first failed expectation.
struct Checker {
  Result r;
  void expect(bool ok, const std::string& what) {
    if (!ok && r.pass) {
      r.pass = false;
      r.detail = what;
    }
  }
};

Result oracle_equivalence() {
  Checker c;
  // every word of length 1..16, walked as binary counters
  std::size_t count = 0;
  for (std::size_t len = 1; len <= 16 && c.r.pass; ++len) {
    std::string s(len, 'a');
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      for (std::size_t i = 0; i < len; ++i) s[i] = (bits >> i) & 1 ? 'b' : 'a';
      const bool fast = is_cube_free(word_from_trusted(s)).cube_free;
      if (fast != oracle::cube_free(s)) {
        c.expect(false, "disagreement on " + s);
        break;
      }
      ++count;
    }
  }
  c.expect(count == 2 * ((std::size_t{1} << 16) - 1), "word count " + std::to_string(count));
  std::mt19937_64 rng(20240531);
  for (int i = 0; i < 10000 && c.r.pass; ++i) {
    std::string s(1 + rng() % 256, 'a');
    for (auto& ch : s) ch = rng() & 1 ? 'b' : 'a';
    // cube-heavy random words alternate with mutated Thue-Morse factors
    if (i % 2) {
      const std::string tm = tm_prefix(Letter::a, 1024).str();
      s = tm.substr(rng() % 512, s.size());
      s[rng() % s.size()] ^= 'a' ^ 'b';
    }
    const bool fast = is_cube_free(word_from_trusted(s)).cube_free;
    c.expect(fast == oracle::cube_free(s), "disagreement on random word " + s);
  }
  if (c.r.pass) c.r.detail = std::to_string(count) + " exhaustive + 10000 random words";
  return c.r;
}

Result thue_morse() {
  Checker c;
  c.expect(is_overlap_free(tm_prefix(Letter::a, 1u << 14)), "prefix of length 2^14 has an overlap");
  for (unsigned n = 0; n < 16; ++n) {
    for (Letter x : {Letter::a, Letter::b}) {
      c.expect(block(n + 1, x) == block(n, x) + block(n, complement(x)),
               "block identity at n = " + std::to_string(n));
    }
  }
  c.expect(block(16, Letter::a).str() == oracle::theta_iterate('a', 16), "block 16 vs iterate");
  if (c.r.pass) c.r.detail = "overlap-free prefix 2^14, block identity n <= 16";
  return c.r;
}

Result morphisms() {
  Checker c;
  c.expect(is_cube_free_morphism(theta()), "theta rejected");
  c.expect(is_cube_free_morphism(psi()), "psi rejected");
  c.expect(!is_cube_free_morphism(Morphism(Word::parse("aa"), Word::parse("bb"))),
           "a->aa, b->bb accepted");
  c.expect(psi().image_a().size() == 108 && psi().image_b().size() == 108, "psi not 108-uniform");
  c.expect(psi().image_b() == rename(psi().image_a()), "psi(b) != rename(psi(a))");
  c.expect(psi().image_a().str() == oracle::psi_a(), "psi(a) differs from its block expansion");
  if (c.r.pass) c.r.detail = "theta, psi accepted; a->aa,b->bb rejected; psi(a) bit-exact";
  return c.r;
}

Result coincidences() {
  Checker c;
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    const std::string ctx = oracle::rev_context(n);
    const bool same = n >= 2 ? ctx[0] == ctx[1] : ctx[0] == 'a';
    std::uint64_t m = n;
    unsigned k = 0;
    while (m % 2 == 0) m /= 2, ++k;
    const bool form = k % 2 == 1;  // m is odd by construction
    c.expect(coincides(n) == form && same == form, "mismatch at n = " + std::to_string(n));
    c.expect(is_odd_times_odd_power_of_two(n) == form, "form test at n = " + std::to_string(n));
  }
  c.expect(rev_tm_context(3).str() == "abb", "rev_tm_context(3)");
  c.expect(rev_tm_context(4).str() == "babb", "rev_tm_context(4)");
  if (c.r.pass) c.r.detail = "1 <= n <= 4096; abb, babb";
  return c.r;
}

Result example_contexts() {
  Checker c;
  const Word w = Word::parse("aabaaba");
  c.expect(fixed_left_context(w, 64) == FixedContext::fixed(Word::parse("abb")), "fixed context");
  const std::vector<std::vector<std::string>> expected = {
      {"b"}, {"bb"}, {"abb"}, {"aabb", "babb"}};
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::string> got;
    for (const auto& u : left_contexts(w, len)) got.push_back(u.str());
    c.expect(got == expected[len - 1], "contexts of length " + std::to_string(len));
    c.expect(got == oracle::contexts("aabaaba", len, true), "oracle contexts " + std::to_string(len));
  }
  if (c.r.pass) c.r.detail = "Fixed(abb); {b},{bb},{abb},{aabb,babb}";
  return c.r;
}

Result maximal_word() {
  Checker c;
  const Word w = Word::parse("aabaabaa");
  const auto l2 = level2(w, 16);
  c.expect(l2.left && l2.left->exact && l2.left->value == 0, "left level");
  c.expect(l2.right && l2.right->exact && l2.right->value == 0, "right level");
  for (Letter x : {Letter::a, Letter::b}) {
    c.expect(!oracle::cube_free((x + w).str()), "left extension cube-free");
    c.expect(!oracle::cube_free((w + x).str()), "right extension cube-free");
  }
  if (c.r.pass) c.r.detail = "level (0,0); four extensions contain cubes";
  return c.r;
}

Result certification() {
  constexpr std::size_t kTop = 17;
  Checker c;
  const auto trace = build_w(kTop);
  std::size_t whitelisted = 0;
  for (std::size_t n = 0; n <= kTop; ++n) {
    const auto cert = certify_iteration(trace, n);
    const auto& r = trace.records[n];
    const std::string at = " at n = " + std::to_string(n);
    c.expect(cert.xw_cube_free, "X_n W_n has a cube" + at);
    c.expect(cert.fixed_at_recorded, "X_n is not the fixed left context" + at);
    c.expect(r.X == rev_tm_context(r.X.size()), "X_n is not a Thue-Morse context" + at);
    c.expect(r.X.size() >= n || cert.whitelisted, "|X_n| < n" + at);
    whitelisted += cert.whitelisted;
    if (r.x) {
      c.expect(cert.v_proper_cube_free.value_or(false), "V_n has a proper cube" + at);
      c.expect(cert.s_prime_occurrences.value_or(0) == 3, "occurrence count != 3" + at);
      c.expect(cert.unit_cube_free.value_or(false), "X_n W_n S_n x_n has a cube" + at);
    }
    c.expect(cert.s_prime_prefix, "buffer prefix diverges from the psi stream" + at);
    c.expect(cert.ok(), "certificate not ok" + at);
  }
  c.expect(longest_tm_factor_len(s_stream(64)) <= 48, "long Thue-Morse factor in the stream");
  if (c.r.pass) {
    c.r.detail = "n <= " + std::to_string(kTop) + ", |W_n| = " +
                 std::to_string(trace.result().size()) + ", " + std::to_string(whitelisted) +
                 " whitelisted";
  }
  return c.r;
}

Result left_premaximal() {
  Checker c;
  std::size_t certified = 0;
  std::string ns;
  for (std::size_t n : {3, 4, 5, 7, 9}) {
    const auto p = build_premax_left(n);
    const std::string at = " at n = " + std::to_string(n);
    c.expect(is_cube_free(p.X + p.word).cube_free, "X_n W-bar_n has a cube" + at);
    const auto level = side_level(p.word, Side::left, n + 2);
    c.expect(level.exact && level.value == n, "left level differs from n" + at);
    c.expect(!level.witness.empty() && left_contexts(p.word, n + 1).empty(),
             "frontier at n+1 not empty" + at);
    if (level.witness.empty()) continue;
    const Letter a_n = level.witness.front().back();
    const auto reduced = side_level(a_n + p.word, Side::left, n + 2);
    c.expect(reduced.exact && reduced.value == n - 1, "reduced level differs from n-1" + at);
    ++certified;
    ns += (ns.empty() ? "" : ",") + std::to_string(n);
  }
  c.expect(certified >= 3, "fewer than 3 instances");
  if (c.r.pass) c.r.detail = "levels exact for n = " + ns + "; reductions to n-1";
  return c.r;
}

Result two_sided() {
  Checker c;
  const auto trace = build_w(16);
  std::optional<std::size_t> first;
  for (const auto& e : eligibility_scan(trace)) {
    if (e.two_sided) {
      first = e.n;
      break;
    }
  }
  if (!first) {
    c.r.blocked = true;
    c.r.pass = false;
    c.r.detail = "blocked-by-scale: no eligible n <= 15; scan " +
                 eligibility_json(eligibility_scan(trace));
    return c.r;
  }
  const std::size_t n = *first;
  const auto w = build_premax_two_sided(n);
  const std::size_t xh = w.X.size() + w.half.size();
  c.expect(w.m % 2 == 0, "m is odd");
  c.expect((std::uint64_t{1} << (w.m - 2)) > xh, "central block too short");
  c.expect(w.m == minimal_block_order(xh), "m not minimal");
  const Word central = block(w.m, complement(w.x));
  c.expect(w.word == w.half + central + reverse(w.half), "word layout");
  c.expect(is_overlap_free(central), "central block not overlap-free");
  c.expect(is_cube_free(w.X + w.half + central).cube_free, "X W-tilde T_m has a cube");
  const auto l2 = level2(w.word, n + 3);
  c.expect(l2.left->exact && l2.left->value == n, "left level");
  c.expect(l2.right->exact && l2.right->value == n, "right level");
  if (c.r.pass) {
    c.r.detail = "n = " + std::to_string(n) + ", m = " + std::to_string(w.m) + ", |word| = " +
                 std::to_string(w.word.size()) + ", level (" + std::to_string(n) + "," +
                 std::to_string(n) + ")";
  }
  return c.r;
}

Result growth() {
  Checker c;
  const auto trace = build_w(16);
  const double base = fitted_growth_base(trace);
  c.expect(base >= 1.85 && base <= 2.35, "base " + std::to_string(base));
  if (c.r.pass) c.r.detail = "base " + std::to_string(base) + " over n = 3..16";
  return c.r;
}

Result exhaustive_search() {
  Checker c;
  const auto up_to_8 = enumerate_extremal(LevelSide::left, {0, 0}, 8);
  c.expect(std::find(up_to_8.begin(), up_to_8.end(), Word::parse("aabaabaa")) != up_to_8.end(),
           "aabaabaa missing");
  c.expect(enumerate_extremal(LevelSide::left, {0, 0}, 3).empty(), "words of length <= 3 found");
  if (c.r.pass) c.r.detail = std::to_string(up_to_8.size()) + " left maximal words of length <= 8";
  return c.r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"Thue-Morse", thue_morse},
      {"cube-free morphisms", morphisms},
      {"coincidence positions", coincidences},
      {"initial word contexts", example_contexts},
      {"maximal word", maximal_word},
      {"construction certification", certification},
      {"left premaximal instances", left_premaximal},
      {"two-sided instance", two_sided},
      {"growth", growth},
      {"exhaustive search", exhaustive_search},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* verdict = r.pass ? "PASS" : (r.blocked ? "FAIL (blocked-by-scale)" : "FAIL");
    std::printf("criterion %zu: %s %s: %s [%.1fs]\n", i + 1, verdict, criteria[i].first,
                r.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
