#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "qmarkoff/cli.hpp"

using qmarkoff::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("tree") {
    auto r = call({"tree", "--depth", "0", "--triples"});
    CHECK(r.code == 0);
    CHECK(r.out == "(1,5,2)\n");
    r = call({"tree", "--depth", "4", "--triples"});
    for (const char* t : {"(13,7561,194)", "(169,499393,985)", "(985,5741,2)", "(89,9077,34)"})
      CHECK_MESSAGE(contains(r.out, t), t);
    r = call({"tree", "--depth", "1", "--qpoly"});
    CHECK(contains(r.out, "a.b: 1 + q + 2*q^2 + q^3\n"));
    r = call({"tree", "--depth", "1", "--json"});
    CHECK(contains(r.out, "\"triple\""));
    CHECK(call({"tree", "--depth", "1", "--triples", "--qpoly"}).code == 2);
  }

  TEST_CASE("qmarkoff") {
    const auto r = call({"qmarkoff", "00101"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "mu: [[463, 194], [284, 119]]\n"));
    CHECK(contains(r.out, "q_markoff: 1 + 4*q + 10*q^2 + 18*q^3 + 27*q^4 + 33*q^5 + 33*q^6 + 29*q^7 + 21*q^8 + "
                          "12*q^9 + 5*q^10 + q^11\n"));
    CHECK(call({"qmarkoff", "abc"}).code == 2);
    CHECK(call({"qmarkoff"}).code == 2);
  }

  TEST_CASE("language") {
    auto r = call({"language", "--spec", "fibonacci", "--n", "8"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "n=6 (7): aabaab aababa abaaba ababaa baabaa baabab babaab\n"));
    CHECK(contains(r.out, "babaabaa -> babaabab  last_letter\n"));
    r = call({"language", "--spec", "fibonacci", "--n", "8", "--alphabet", "01"});
    CHECK(contains(r.out, "compact: 1010010010100101 1010010100100101\n"));
    r = call({"language", "--spec", "periodic:ab", "--n", "3", "--json"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"languages\""));
    CHECK(call({"language", "--spec", "bogus", "--n", "3"}).code == 2);
    CHECK(call({"language", "--spec", "fibonacci", "--n", "0"}).code == 2);
  }

  TEST_CASE("verify-monotone") {
    auto r = call({"verify-monotone", "--spec", "fibonacci", "--max-n", "9"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "factors: 55\n"));
    CHECK(contains(r.out, "result: PASS\n"));
    CHECK(call({"verify-monotone", "--spec", "fibonacci", "--max-n", "-1"}).code == 2);
  }

  TEST_CASE("spectrum") {
    auto r = call({"spectrum", "ab", "--depth", "64"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "m: 5\n"));
    CHECK(contains(r.out, "result: PASS\n"));
    r = call({"spectrum", "aabab", "--csv"});
    CHECK(contains(r.out, "word,m,supremum,closed_form,residual,error_bound,result\naabab,194,"));
    CHECK(call({"spectrum", "aabb"}).code == 2);
    CHECK(call({"spectrum", "ab", "--depth", "1"}).code == 2);
  }

  TEST_CASE("curves") {
    auto r = call({"curves", "--spec", "fibonacci", "--max-len", "3", "--gammas", "0.5,1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("word,gamma,value\n,0.5,0\n,1,0\n0,0.5,", 0) == 0);
    CHECK(contains(r.out, "\n01,1,5\n"));
    CHECK(call({"curves", "--spec", "fibonacci", "--max-len", "3", "--gammas", "0,1"}).code == 2);
    CHECK(call({"curves", "--spec", "fibonacci", "--max-len", "3", "--gammas", "x"}).code == 2);
  }

  TEST_CASE("pair-check") {
    auto r = call({"pair-check", "--spec", "fibonacci", "--radius", "4", "--noncontiguous"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "agreement: yes\n"));
    r = call({"pair-check", "--spec", "fibonacci", "--radius", "1", "--control"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "result: FAIL\n"));
    CHECK(call({"pair-check", "--spec", "periodic:ab", "--radius", "2"}).code == 2);
  }

  TEST_CASE("counterexamples") {
    const auto r = call({"counterexamples"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "q - q^2 - 2*q^3 - 2*q^4 - 3*q^5 - 2*q^6 - q^7\n"));
    CHECK(contains(r.out, "1 + 5*q + 16*q^2 + 38*q^3 + 70*q^4 + 109*q^5 + 145*q^6 + 168*q^7 + 171*q^8 + 152*q^9 + "
                          "118*q^10 + 79*q^11 + 44*q^12 + 19*q^13 + 6*q^14 + q^15\n"));
    CHECK_FALSE(contains(r.out, "NOT CONFIRMED"));
  }

  TEST_CASE("usage errors") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"--help"}).code == 0);
  }

  TEST_CASE("output does not depend on the thread count") {
    const std::vector<std::vector<std::string>> commands{
        {"verify-monotone", "--spec", "fibonacci", "--max-n", "10"},
        {"curves", "--spec", "characteristic:2,1", "--max-len", "6"},
        {"pair-check", "--spec", "fibonacci", "--radius", "3", "--noncontiguous"},
        {"spectrum", "aababab"},
        {"language", "--spec", "skew:m=a,form=blocks,xy=ab", "--n", "7", "--json"},
    };
    for (const auto& cmd : commands) {
      setenv("QMARKOFF_THREADS", "1", 1);
      const auto one = call(cmd);
      setenv("QMARKOFF_THREADS", "4", 1);
      const auto four = call(cmd);
      unsetenv("QMARKOFF_THREADS");
      CHECK(one.code == four.code);
      CHECK(one.out == four.out);
      CHECK(one.out == call(cmd).out);
    }
  }
}
