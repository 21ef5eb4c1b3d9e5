#include <doctest.h>

#include <bit>
#include <thread>

#include "cubefree/thue_morse.hpp"
#include "oracles.hpp"

using namespace cubefree;

TEST_SUITE("thue_morse") {

TEST_CASE("blocks") {
  CHECK(block(0, Letter::b).str() == "b");
  CHECK(block(2, Letter::a).str() == "abba");
  CHECK(block(2, Letter::b).str() == "baab");
  CHECK(block(3, Letter::a).str() == oracle::theta_iterate('a', 3));
  CHECK(block(3, Letter::a).str() == "abbabaab");
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(block(n, Letter::a).str() == oracle::theta_iterate('a', n));
    CHECK(block(n, Letter::b).str() == oracle::theta_iterate('b', n));
  }
}

TEST_CASE("prefixes") {
  CHECK(tm_prefix(Letter::a, 0).empty());
  CHECK(tm_prefix(Letter::b, 4).str() == "baab");
  CHECK(tm_prefix(Letter::a, 8) == block(3, Letter::a));
  CHECK(tm_prefix(Letter::a, 1000).str() == oracle::theta_iterate('a', 10).substr(0, 1000));
}

TEST_CASE("reversed word") {
  CHECK(rev_tm_letter(0) == Letter::a);
  CHECK(rev_tm_letter(3) == Letter::a);
  CHECK(rev_tm_letter(4) == Letter::b);
  CHECK(rev_tm_context(0).empty());
  CHECK(rev_tm_context(3).str() == "abb");
  CHECK(rev_tm_context(4).str() == "babb");
  for (std::size_t k = 0; k <= 300; ++k) {
    CHECK(rev_tm_context(k).str() == oracle::rev_context(k));
    CHECK(rev_tm_context(k + 1) == rev_tm_letter(k + 1) + rev_tm_context(k));
  }
}

TEST_CASE("coincides") {
  CHECK_FALSE(coincides(1));
  CHECK(coincides(2));
  CHECK(coincides(8));
  CHECK_THROWS_AS(coincides(0), DomainError);
  for (std::uint64_t n = 1; n <= 512; ++n) {
    const std::string ctx = oracle::rev_context(n);
    CHECK(coincides(n) == (ctx[0] == (n >= 2 ? ctx[1] : 'a')));
  }
}

TEST_CASE("trivial iteration set") {
  CHECK(trivial_iteration_set(1).empty());
  CHECK(trivial_iteration_set(8) == std::set<std::uint64_t>{2, 6, 8});
  CHECK(trivial_iteration_set(32) ==
        std::set<std::uint64_t>{2, 6, 8, 10, 14, 18, 22, 24, 26, 30, 32});
}

TEST_CASE("factor membership") {
  CHECK(is_tm_factor(Word::parse("abba")));
  CHECK_FALSE(is_tm_factor(Word::parse("aaa")));
  CHECK_FALSE(is_tm_factor(Word::parse("aabaa")));
  CHECK(is_tm_factor(Word{}));
  const std::string t = oracle::theta_iterate('a', 14);
  for (const auto& w : oracle::all_words(9)) {
    CHECK(is_tm_factor(Word::parse(w)) == (t.find(w) != std::string::npos));
  }
  // a long factor far from the start
  CHECK(is_tm_factor(Word::parse(t.substr(9000, 3000))));
}

TEST_CASE("longest factor") {
  CHECK(longest_tm_factor_len(Word{}) == 0);
  CHECK(longest_tm_factor_len(Word::parse("abba")) == 4);
  CHECK(longest_tm_factor_len(Word::parse("aaa")) == 2);
  CHECK(longest_tm_factor_len(Word::parse(oracle::psi_b())) <= 48);
}

TEST_CASE("oracle cache") {
  TMOracle oracle_instance;
  CHECK(oracle_instance.cached_length() == 0);
  std::vector<std::thread> pool;
  for (int i = 0; i < 4; ++i) {
    pool.emplace_back([&, i] {
      for (int k = 0; k < 50; ++k) {
        const auto len = static_cast<std::size_t>(1000 * (i + 1) + k);
        const Word w = tm_prefix(Letter::b, len);
        CHECK(oracle_instance.is_factor(w));
      }
    });
  }
  for (auto& t : pool) t.join();
  CHECK(oracle_instance.cached_length() >= 4096);
  CHECK(std::has_single_bit(oracle_instance.cached_length()));
  const Word cached = tm_prefix(Letter::a, oracle_instance.cached_length());
  CHECK(is_overlap_free(cached));
}

}  // TEST_SUITE
