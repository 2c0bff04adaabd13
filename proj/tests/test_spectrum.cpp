#include <doctest.h>

#include <cmath>

#include "qmarkoff/errors.hpp"
#include "qmarkoff/morphism.hpp"
#include "qmarkoff/spectrum.hpp"

using namespace qmarkoff;

namespace {

double as_double(const Rational& r) { return r.convert_to<double>(); }

std::vector<BinaryWord> christoffel_words(std::size_t max_len) {
  std::vector<BinaryWord> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      BinaryWord w;
      for (std::size_t k = 0; k < n; ++k) w += (mask >> k & 1) ? Letter::b : Letter::a;
      if (is_christoffel(w)) out.push_back(w);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("spectrum") {
  TEST_CASE("sigma") {
    CHECK(sigma_subst(word("a")) == std::vector<unsigned>{1, 1});
    CHECK(sigma_subst(word("ab")) == std::vector<unsigned>{1, 1, 2, 2});
    CHECK(sigma_subst(BinaryWord{}).empty());
  }

  TEST_CASE("continued fraction brackets") {
    const auto one = PeriodicCF::make({1});
    const CfBracket b2 = cf_tail(one, 0, 2);
    CHECK(b2.lo == Rational(1, 2));
    CHECK(b2.hi == Rational(1));
    const CfBracket b = cf_tail(one, 0, 64);
    const double phi_inv = (std::sqrt(5.0) - 1) / 2;
    CHECK(as_double(b.lo) <= phi_inv);
    CHECK(as_double(b.hi) >= phi_inv);
    CHECK(as_double(b.width()) < 1e-20);
    const CfBracket s2 = cf_tail(PeriodicCF::make({2}), 3, 40);
    CHECK(as_double(s2.lo) == doctest::Approx(std::sqrt(2.0) - 1));
    CHECK_THROWS_AS(cf_tail(one, 0, 1), PreconditionError);
    CHECK_THROWS_AS(PeriodicCF::make({}), PreconditionError);
    CHECK_THROWS_AS(PeriodicCF::make({1, 0}), PreconditionError);
  }

  TEST_CASE("brackets straddle deeper convergents and shrink") {
    const auto seq = PeriodicCF::make({1, 1, 2, 2, 1, 2});
    for (std::int64_t start = -3; start <= 6; ++start) {
      double previous = 1;
      for (std::size_t depth = 2; depth <= 30; ++depth) {
        const CfBracket b = cf_tail(seq, start, depth);
        const CfBracket deeper = cf_tail(seq, start, depth + 8);
        CHECK(b.lo <= deeper.lo);
        CHECK(deeper.hi <= b.hi);
        const double w = as_double(b.width());
        CHECK(w <= previous);
        previous = w;
      }
    }
  }

  TEST_CASE("lambda values") {
    const auto ones = PeriodicCF::make(sigma_subst(word("a")));
    CHECK(lambda_i(ones, 0, 64).value.convert_to<double>() == doctest::Approx(std::sqrt(5.0)));
    const auto twos = PeriodicCF::make({2, 2});
    CHECK(lambda_i(twos, 1, 64).value.convert_to<double>() == doctest::Approx(2 * std::sqrt(2.0)));
    const auto mixed = PeriodicCF::make({1, 1, 2, 2});
    CHECK(lambda_i(mixed, 2, 64).value.convert_to<double>() == doctest::Approx(2.9732).epsilon(1e-4));
    CHECK(lambda_i(mixed, 1, 64).value == lambda_i(mixed, 5, 64).value);
    CHECK(lambda_i(mixed, 0, 64).error_bound > 0);
  }

  TEST_CASE("Markoff suprema against the closed form") {
    const auto ab = markoff_supremum(PeriodicCF::make(sigma_subst(word("ab"))), 64);
    CHECK(ab.value.convert_to<double>() == doctest::Approx(std::sqrt(221.0) / 5));
    for (const auto& w : christoffel_words(8)) {
      const ClosedFormReport r = closed_form_check(w);
      CHECK_MESSAGE(r.within_bound, w.str());
      CHECK(r.residual <= 1e-9);
      CHECK(r.supremum.value <= BigFloat(3) + BigFloat(1e-9));
    }
    CHECK(closed_form_check(word("aabab")).m == 194);
    const auto bad = markoff_supremum(PeriodicCF::make(sigma_subst(word("aabb"))), 64);
    CHECK(bad.value > BigFloat(3));
    CHECK_THROWS_WITH(closed_form_check(word("aabb")), doctest::Contains("Christoffel word required"));
  }

  TEST_CASE("error bound does not grow with depth") {
    const auto seq = PeriodicCF::make(sigma_subst(word("aabab")));
    double previous = 1;
    for (std::size_t depth = 2; depth <= 64; depth += 2) {
      const double e = markoff_supremum(seq, depth).error_bound;
      CHECK(e <= previous);
      previous = e;
    }
  }
}
