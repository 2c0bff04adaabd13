#pragma once

// Test-only reference implementations, written independently of the
// library: sparse polynomials, Laurent matrices in R_q and S_q, and
// brute-force balance / Markoff checks on long periodic windows.

#include <map>
#include <string>
#include <vector>

#include "qmarkoff/numeric.hpp"
#include "qmarkoff/qpoly.hpp"

namespace oracle {

using qmarkoff::BigInt;

// Laurent polynomial: exponent -> coefficient, zero entries erased.
using Laurent = std::map<int, BigInt>;

inline Laurent trim(Laurent p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

inline Laurent add(const Laurent& f, const Laurent& g, int sign = 1) {
  Laurent out = f;
  for (const auto& [e, c] : g) out[e] += sign * c;
  return trim(out);
}

inline Laurent mul(const Laurent& f, const Laurent& g) {
  Laurent out;
  for (const auto& [e1, c1] : f)
    for (const auto& [e2, c2] : g) out[e1 + e2] += c1 * c2;
  return trim(out);
}

inline Laurent mono(long long c, int e) { return trim(Laurent{{e, BigInt(c)}}); }

struct Mat {
  Laurent a, b, c, d;
};

inline Mat mul(const Mat& l, const Mat& r) {
  return {add(mul(l.a, r.a), mul(l.b, r.c)), add(mul(l.a, r.b), mul(l.b, r.d)),
          add(mul(l.c, r.a), mul(l.d, r.c)), add(mul(l.c, r.b), mul(l.d, r.d))};
}

inline Mat R() { return {mono(1, 1), mono(1, 0), {}, mono(1, 0)}; }
inline Mat S() { return {{}, mono(-1, -1), mono(1, 0), {}}; }

// a = R^2 S R, b = R^3 S R^2 S R
inline Mat letter(char x) {
  const Mat r = R(), s = S();
  if (x == 'a') return mul(mul(mul(r, r), s), r);
  return mul(mul(mul(mul(mul(mul(mul(r, r), r), s), r), r), s), r);
}

inline Mat product(const std::string& w) {
  Mat m{mono(1, 0), {}, {}, mono(1, 0)};
  for (char x : w) m = mul(m, letter(x));
  return m;
}

inline Laurent q_markoff(const std::string& w) { return product(w).b; }

inline Laurent from_poly(const qmarkoff::IntPolynomial& p) {
  Laurent out;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) out[static_cast<int>(k)] = c[k];
  return trim(out);
}

inline Laurent from_list(const std::vector<long long>& coeffs) {
  Laurent out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) out[static_cast<int>(k)] = coeffs[k];
  return trim(out);
}

// Integer version: R=[[1,1],[0,1]], S=[[0,-1],[1,0]].
inline BigInt mu12(const std::string& w) {
  BigInt a = 1, b = 0, c = 0, d = 1;
  for (char x : w) {
    const BigInt la = x == 'a' ? 2 : 5, lb = x == 'a' ? 1 : 2, lc = x == 'a' ? 1 : 2, ld = 1;
    BigInt na = a * la + b * lc, nb = a * lb + b * ld, nc = c * la + d * lc, nd = c * lb + d * ld;
    a = na, b = nb, c = nc, d = nd;
  }
  return b;
}

inline std::string periodic(const std::string& w, std::size_t len) {
  std::string out;
  while (out.size() < len) out += w;
  out.resize(len);
  return out;
}

// Every pair of factors of equal length n <= 2p, read from a 5p window,
// differs by at most one b.
inline bool balanced(const std::string& w) {
  const std::size_t p = w.size();
  const std::string s = periodic(w, 5 * p);
  for (std::size_t n = 1; n <= 2 * p; ++n) {
    int lo = 1 << 30, hi = -1;
    for (std::size_t i = 0; i + n <= s.size(); ++i) {
      int k = 0;
      for (std::size_t j = i; j < i + n; ++j) k += s[j] == 'b';
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

// Markoff property on ^∞w^∞, straight from the factorization s = u x y v:
// either ~u = v, or u = u' y m and v = ~m x v'. Infinite mirrors are
// detected on a window of 3p letters each side.
inline bool markoff_property(const std::string& w) {
  const std::size_t p = w.size();
  const std::string s = periodic(w, 7 * p);
  for (std::size_t i = 3 * p; i < 4 * p; ++i) {
    const char x = s[i], y = s[i + 1];
    if (x == y) continue;
    const std::string u = s.substr(0, i);
    const std::string v = s.substr(i + 2);
    bool ok = false;
    bool infinite = true;
    for (std::size_t m = 0; m < 3 * p; ++m) {
      std::string um = u.substr(u.size() - m);
      std::string vm = v.substr(0, m);
      std::string rev(vm.rbegin(), vm.rend());
      if (um != rev) {
        infinite = false;
        break;
      }
      if (u[u.size() - m - 1] == y && v[m] == x) {
        ok = true;
        break;
      }
    }
    if (!ok && !infinite) return false;
  }
  return true;
}

}  // namespace oracle
