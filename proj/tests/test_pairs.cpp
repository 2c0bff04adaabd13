#include <doctest.h>

#include "qmarkoff/errors.hpp"
#include "qmarkoff/pairs.hpp"

using namespace qmarkoff;

TEST_SUITE("pairs") {
  TEST_CASE("pattern construction") {
    const Pattern p = Pattern::make({{2, Letter::b}, {-1, Letter::a}});
    CHECK(p.support == std::vector<std::int64_t>{-1, 2});
    CHECK(p.letters == std::vector<Letter>{Letter::a, Letter::b});
    CHECK_THROWS_AS(Pattern::make({{0, Letter::a}, {0, Letter::b}}), PreconditionError);
    CHECK(Pattern::contiguous(-1, word("ab")).shifted(3).support == std::vector<std::int64_t>{2, 3});
  }

  TEST_CASE("the Fibonacci pair") {
    const auto pair = build_pair(BalancedSpec::fibonacci());
    CHECK(pair.difference_set() == std::vector<std::int64_t>{-1, 0});
    CHECK(pair.s_window(-8, 16).str(Glyphs::binary) == "1010010010100101");
    CHECK(pair.t_window(-8, 16).str(Glyphs::binary) == "1010010100100101");
    CHECK(occ_diff(pair, Pattern::contiguous(0, word("a"))) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(occ_diff(pair, Pattern{}) == std::pair<std::size_t, std::size_t>{0, 0});
    const auto ab = occ_diff(pair, Pattern::contiguous(-1, word("ab")));
    CHECK(ab.first == ab.second);
    for (std::size_t r = 1; r <= 8; ++r) CHECK(is_indistinguishable_up_to(pair, r).holds);
  }

  TEST_CASE("symmetry and shift invariance") {
    const auto pair = build_pair(BalancedSpec::fibonacci());
    const auto swapped = pair.swapped();
    const auto shifted = pair.shifted(3);
    for (const char* w : {"a", "ab", "aab", "baab", "abaab"}) {
      for (std::int64_t at = -4; at <= 2; ++at) {
        const Pattern p = Pattern::contiguous(at, word(w));
        const auto c = occ_diff(pair, p);
        const auto s = occ_diff(swapped, p);
        CHECK(s.first == c.second);
        CHECK(s.second == c.first);
        CHECK(occ_diff(shifted, p.shifted(-3)) == c);
      }
    }
    const auto five = build_pair(BalancedSpec::fibonacci(), 5);
    CHECK(five.difference_set() == std::vector<std::int64_t>{4, 5});
    CHECK(five.s_window(-20, 50) == pair.s_window(-25, 50));
    CHECK(five.t_window(-20, 50) == pair.t_window(-25, 50));
  }

  TEST_CASE("contiguous supports agree with every support") {
    for (const char* text : {"fibonacci", "skew:m=,form=xxyxx,xy=ab", "skew:m=a,form=blocks,xy=ba"}) {
      const auto pair = build_pair(BalancedSpec::parse(text));
      for (std::size_t r = 1; r <= 4; ++r) {
        const auto fast = is_indistinguishable_up_to(pair, r);
        const auto brute = is_indistinguishable_bruteforce(pair, r);
        CHECK_MESSAGE(fast.holds == brute.holds, text);
        CHECK(brute.holds);
      }
    }
    const auto control = flip_one_position(BalancedSpec::fibonacci());
    CHECK_FALSE(is_indistinguishable_bruteforce(control, 2).holds);
  }

  TEST_CASE("skew pairs") {
    const auto pair = build_pair(BalancedSpec::parse("skew:m=,form=xxyxx,xy=ab"));
    CHECK(pair.s_window(-3, 6).str() == "aaabaa");
    CHECK(pair.t_window(-3, 6).str() == "aabaaa");
    CHECK(is_indistinguishable_up_to(pair, 6).holds);
  }

  TEST_CASE("controls fail") {
    const auto control = flip_one_position(BalancedSpec::fibonacci());
    const auto r = is_indistinguishable_up_to(control, 1);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness_counts.first + r.witness_counts.second >= 1);
    CHECK_THROWS_WITH(build_pair(BalancedSpec::periodic(word("ab"))), doctest::Contains("no central factorization"));
    CHECK_THROWS_AS(is_indistinguishable_up_to(control, 0), PreconditionError);
  }

  TEST_CASE("both central windows carry the same factor sets") {
    const auto pair = build_pair(BalancedSpec::fibonacci());
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto first = -static_cast<std::int64_t>(n);
      CHECK(factors(pair.s_window(first, 2 * n), n) == factors(pair.t_window(first, 2 * n), n));
    }
  }
}
