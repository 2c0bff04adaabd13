#pragma once

// Dense integer polynomials in one indeterminate q, the coefficientwise
// partial order, and 2x2 matrices over Z[q].

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qmarkoff/numeric.hpp"

namespace qmarkoff {

/// Coefficient i multiplies q^i. The highest stored coefficient is never
/// zero; the zero polynomial stores nothing.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long long constant);  // NOLINT: integers embed as constants
  IntPolynomial(const BigInt& constant);  // NOLINT
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  /// c * q^k
  static IntPolynomial monomial(const BigInt& c, std::size_t k);
  static IntPolynomial q() { return monomial(1, 1); }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;

  /// Coefficient of q^i (zero beyond the degree).
  BigInt operator[](std::size_t i) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial f, const IntPolynomial& g) { return f += g; }
  friend IntPolynomial operator-(IntPolynomial f, const IntPolynomial& g) { return f -= g; }
  friend IntPolynomial operator*(IntPolynomial f, const IntPolynomial& g) { return f *= g; }
  friend IntPolynomial operator-(const IntPolynomial& f);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Horner evaluation; exact for rationals.
  Rational eval(const Rational& x) const;
  double eval(double x) const;
  BigFloat eval(const BigFloat& x) const;

  /// Ascending powers, e.g. "1 + 4*q + 10*q^2" or "q - q^2"; "0" for zero.
  std::string str() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

enum class PolyOp { add, sub, mul };

IntPolynomial poly_arith(const IntPolynomial& f, const IntPolynomial& g, PolyOp op);

/// f != 0 and every coefficient >= 0.
bool poly_is_nonneg_nonzero(const IntPolynomial& f);

/// f ≺ g: g - f is nonzero with nonnegative coefficients.
bool poly_precede(const IntPolynomial& f, const IntPolynomial& g);

struct QMatrix {
  IntPolynomial e11, e12, e21, e22;

  static QMatrix identity() { return {1, 0, 0, 1}; }

  IntPolynomial det() const { return e11 * e22 - e12 * e21; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

QMatrix qmat_mul(const QMatrix& lhs, const QMatrix& rhs);
QMatrix qmat_add(const QMatrix& lhs, const QMatrix& rhs);
QMatrix qmat_sub(const QMatrix& lhs, const QMatrix& rhs);
QMatrix qmat_scale(const IntPolynomial& c, const QMatrix& m);

inline QMatrix operator*(const QMatrix& lhs, const QMatrix& rhs) { return qmat_mul(lhs, rhs); }
inline QMatrix operator-(const QMatrix& lhs, const QMatrix& rhs) { return qmat_sub(lhs, rhs); }
inline QMatrix operator+(const QMatrix& lhs, const QMatrix& rhs) { return qmat_add(lhs, rhs); }
inline QMatrix operator*(const IntPolynomial& c, const QMatrix& m) { return qmat_scale(c, m); }

/// "[[e11, e12], [e21, e22]]" with canonical polynomial text.
std::string to_string(const QMatrix& m);

}  // namespace qmarkoff
