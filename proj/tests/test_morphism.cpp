#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qmarkoff/errors.hpp"
#include "qmarkoff/morphism.hpp"

using namespace qmarkoff;

namespace {

std::vector<BinaryWord> words_up_to(std::size_t max_len) {
  std::vector<BinaryWord> out{BinaryWord{}};
  for (std::size_t n = 1; n <= max_len; ++n) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      BinaryWord w;
      for (std::size_t k = 0; k < n; ++k) w += (mask >> k & 1) ? Letter::b : Letter::a;
      out.push_back(w);
    }
  }
  return out;
}

IntPolynomial poly(std::vector<long long> c) {
  std::vector<BigInt> big(c.begin(), c.end());
  return IntPolynomial(std::move(big));
}

const IntPolynomial q = IntPolynomial::q();

}  // namespace

TEST_SUITE("morphism") {
  TEST_CASE("generators") {
    CHECK(mu(word("a")) == IntMatrix2{2, 1, 1, 1});
    CHECK(mu(word("b")) == IntMatrix2{5, 2, 2, 1});
    CHECK(mu(BinaryWord{}) == IntMatrix2::identity());
    CHECK(mu_q(Letter::a) == QMatrix{q + q * q, 1, q, 1});
    CHECK(mu_q(BinaryWord{}) == QMatrix::identity());
    CHECK(to_string(mu(word("aabab"))) == "[[463, 194], [284, 119]]");
  }

  TEST_CASE("mu_q agrees with the R_q / S_q Laurent product") {
    for (const auto& w : words_up_to(7)) {
      const QMatrix m = mu_q(w);
      const auto o = oracle::product(w.str());
      CHECK(oracle::from_poly(m.e11) == o.a);
      CHECK(oracle::from_poly(m.e12) == o.b);
      CHECK(oracle::from_poly(m.e21) == o.c);
      CHECK(oracle::from_poly(m.e22) == o.d);
      CHECK(specialize_at_one(m) == mu(w));
      CHECK(mu(w).e12 == oracle::mu12(w.str()));
    }
  }

  TEST_CASE("golden q-Markoff polynomials of the tree") {
    CHECK(q_markoff(word("ab")) == poly({1, 1, 2, 1}));
    CHECK(q_markoff(word("aab")) == poly({1, 2, 3, 3, 3, 1}));
    CHECK(q_markoff(word("abb")) == poly({1, 2, 5, 6, 6, 5, 3, 1}));
    CHECK(q_markoff(word("aaab")) == poly({1, 3, 5, 7, 7, 6, 4, 1}));
    CHECK(q_markoff(word("aabab")) == poly({1, 4, 10, 18, 27, 33, 33, 29, 21, 12, 5, 1}));
    CHECK(q_markoff(word("ababb")) == poly({1, 4, 12, 25, 42, 58, 68, 69, 61, 45, 28, 14, 5, 1}));
    CHECK(q_markoff(word("abbb")) == poly({1, 3, 9, 16, 24, 29, 29, 25, 18, 10, 4, 1}));
    CHECK(q_markoff(word("aabab")).str() ==
          "1 + 4*q + 10*q^2 + 18*q^3 + 27*q^4 + 33*q^5 + 33*q^6 + 29*q^7 + 21*q^8 + 12*q^9 + 5*q^10 + q^11");
  }

  TEST_CASE("determinant") {
    for (const auto& w : words_up_to(8)) {
      const std::size_t n = 2 * w.count(Letter::a) + 4 * w.count(Letter::b);
      CHECK(det_mu_q(w) == IntPolynomial::monomial(1, n));
    }
  }

  TEST_CASE("flip matrix") {
    CHECK(d_q() == QMatrix{0, q + q * q * q * q, -(q * q) - q * q * q * q * q, 0});
    CHECK(mu_q(word("ba")) - mu_q(word("ab")) == d_q());
    for (const auto& u : words_up_to(6)) {
      const std::size_t n = 2 * u.count(Letter::a) + 4 * u.count(Letter::b);
      CHECK(flip_delta(u) == IntPolynomial::monomial(1, n) * d_q());
    }
  }

  TEST_CASE("positivity reports") {
    for (const auto& w : words_up_to(8)) {
      const PositivityReport r = positivity_report(w);
      CHECK(r.holds(w.empty()));
      CHECK(r.expr31 == q * r.m - q * q * r.n + r.o);
    }
    const PositivityReport e = positivity_report(BinaryWord{});
    CHECK(e.n.is_zero());
    CHECK(e.o.is_zero());
  }

  TEST_CASE("local differences") {
    for (const auto& w : words_up_to(6)) {
      CHECK(delta_last_letter(w) == q * mu_q(w).e11);
      const WrapDelta d = delta_wrap(w);
      CHECK(d.awa_minus_bw == q_markoff(Letter::a + w + Letter::a) - q_markoff(Letter::b + w));
      CHECK(poly_is_nonneg_nonzero(d.awa_minus_bw));
      CHECK(poly_is_nonneg_nonzero(d.awb_minus_awa));
    }
    const BinaryWord u = word("ab"), v = word("aba");
    CHECK(flip_prefix_delta(u, v) ==
          q_markoff(reversal(u) + word("ba") + v) - q_markoff(reversal(u) + word("ab") + v));
    CHECK(poly_is_nonneg_nonzero(flip_prefix_delta(u, v)));
    CHECK_THROWS_WITH(flip_prefix_delta(word("ab"), word("ba")), doctest::Contains("prefix"));
  }

  TEST_CASE("tree paths") {
    CHECK(TreePath::parse("lR").str() == "LR");
    CHECK(TreePath::parse("").steps.empty());
    CHECK_THROWS_AS(TreePath::parse("LX"), PreconditionError);
    CHECK(paths_at_depth(3).size() == 8);
    CHECK(paths_at_depth(2).front().str() == "LL");
  }

  TEST_CASE("Christoffel and Markoff trees") {
    const ChristoffelNode root = christoffel_node(TreePath{});
    CHECK(root.u == word("a"));
    CHECK(root.v == word("b"));
    CHECK(root.word == word("ab"));
    CHECK(christoffel_node(TreePath::parse("LR")).word == word("aabab"));
    CHECK(markoff_triple(TreePath{}).str() == "(1,5,2)");
    for (std::size_t d = 0; d <= 8; ++d) {
      for (const auto& p : paths_at_depth(d)) {
        const MarkoffTriple t = markoff_triple(p);
        const ChristoffelNode n = christoffel_node(p);
        CHECK(t.satisfies_equation());
        CHECK(t.is_proper());
        CHECK(is_christoffel(n.word));
        CHECK(t.y == mu(n.word).e12);
        CHECK(t.x == mu(n.u).e12);
        CHECK(t.z == mu(n.v).e12);
      }
    }
  }
}
