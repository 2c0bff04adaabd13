#pragma once

// The Markoff morphism mu: {a,b}* -> SL2(Z), its q-deformation mu_q into
// 2x2 matrices over Z[q], the flip matrix D_q, and the twin binary trees of
// Christoffel words and Markoff triples.

#include <string>
#include <string_view>
#include <vector>

#include "qmarkoff/numeric.hpp"
#include "qmarkoff/qpoly.hpp"
#include "qmarkoff/words.hpp"

namespace qmarkoff {

struct IntMatrix2 {
  BigInt e11, e12, e21, e22;

  static IntMatrix2 identity() { return {1, 0, 0, 1}; }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

IntMatrix2 operator*(const IntMatrix2& l, const IntMatrix2& r);
std::string to_string(const IntMatrix2& m);

/// mu(a) = [[2,1],[1,1]], mu(b) = [[5,2],[2,1]].
IntMatrix2 mu(const BinaryWord& w);

/// mu_q(a) = [[q+q^2, 1],[q, 1]], mu_q(b) = [[q+2q^2+q^3+q^4, 1+q],[q+q^2, 1]].
QMatrix mu_q(Letter x);
QMatrix mu_q(const BinaryWord& w);

/// Entry (1,2) of mu_q(w): the q-analog of mu(w)_12.
IntPolynomial q_markoff(const BinaryWord& w);

/// Every entry evaluated at q = 1.
IntMatrix2 specialize_at_one(const QMatrix& m);

/// q^(2|w|_a + 4|w|_b), cross-checked against the determinant of mu_q(w).
IntPolynomial det_mu_q(const BinaryWord& w);

/// D_q = mu_q(ba) - mu_q(ab) = [[0, q+q^4], [-q^2-q^5, 0]].
const QMatrix& d_q();

/// mu_q(~u ba u) - mu_q(~u ab u), checked equal to q^n D_q with
/// n = 2|u|_a + 4|u|_b.
QMatrix flip_delta(const BinaryWord& u);

struct PositivityReport {
  IntPolynomial m, n, o, p;
  IntPolynomial expr31;  // q m - q^2 n + o
  IntPolynomial expr32;  // (q+q^2) m - (q^2+q^3+q^4) n + o - q p

  /// m, p, expr31, expr32 nonzero with nonnegative coefficients; n and o
  /// likewise, except both vanish for the empty word.
  bool holds(bool word_is_empty) const;
};

PositivityReport positivity_report(const BinaryWord& w);

/// q_markoff(w b) - q_markoff(w a); equals q * mu_q(w)_11.
IntPolynomial delta_last_letter(const BinaryWord& w);

struct WrapDelta {
  IntPolynomial awa_minus_bw;   // q_markoff(a w a) - q_markoff(b w)
  IntPolynomial awb_minus_awa;  // q_markoff(a w b) - q_markoff(a w a)
};

WrapDelta delta_wrap(const BinaryWord& w);

/// q_markoff(~u ba v) - q_markoff(~u ab v) for u a prefix of v or vice
/// versa. Throws PreconditionError otherwise.
IntPolynomial flip_prefix_delta(const BinaryWord& u, const BinaryWord& v);

enum class Step { left, right };

struct TreePath {
  std::vector<Step> steps;

  /// "" is the root; letters L/R (case-insensitive).
  static TreePath parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const TreePath&, const TreePath&) = default;
};

/// All 2^depth paths of the given depth, left before right.
std::vector<TreePath> paths_at_depth(std::size_t depth);

struct ChristoffelNode {
  BinaryWord u, v, word;
};

/// Root (a, b); left (u, v) -> (u, uv); right (u, v) -> (uv, v).
ChristoffelNode christoffel_node(const TreePath& path);

struct MarkoffTriple {
  BigInt x, y, z;

  bool satisfies_equation() const { return x * x + y * y + z * z == 3 * x * y * z; }
  bool is_proper() const { return x != y && y != z && x != z; }
  std::string str() const;

  friend bool operator==(const MarkoffTriple&, const MarkoffTriple&) = default;
};

/// Root (1,5,2); left (x,y,z) -> (x, 3xy-z, y); right -> (y, 3yz-x, z).
MarkoffTriple markoff_triple(const TreePath& path);

}  // namespace qmarkoff
