#include "qmarkoff/qpoly.hpp"

#include <algorithm>

namespace qmarkoff {

IntPolynomial::IntPolynomial(long long constant) : IntPolynomial(BigInt(constant)) {}

IntPolynomial::IntPolynomial(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<BigInt> coeffs(k + 1);
  coeffs[k] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt IntPolynomial::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial operator-(const IntPolynomial& f) {
  IntPolynomial out = f;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

double IntPolynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

BigFloat IntPolynomial::eval(const BigFloat& x) const {
  BigFloat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigFloat(*it);
  return acc;
}

std::string IntPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial poly_arith(const IntPolynomial& f, const IntPolynomial& g, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return f + g;
    case PolyOp::sub:
      return f - g;
    case PolyOp::mul:
      return f * g;
  }
  return {};
}

bool poly_is_nonneg_nonzero(const IntPolynomial& f) {
  if (f.is_zero()) return false;
  const auto& cs = f.coefficients();
  return std::all_of(cs.begin(), cs.end(), [](const BigInt& c) { return c >= 0; });
}

bool poly_precede(const IntPolynomial& f, const IntPolynomial& g) {
  return poly_is_nonneg_nonzero(g - f);
}

QMatrix qmat_mul(const QMatrix& l, const QMatrix& r) {
  return {l.e11 * r.e11 + l.e12 * r.e21, l.e11 * r.e12 + l.e12 * r.e22,
          l.e21 * r.e11 + l.e22 * r.e21, l.e21 * r.e12 + l.e22 * r.e22};
}

QMatrix qmat_add(const QMatrix& l, const QMatrix& r) {
  return {l.e11 + r.e11, l.e12 + r.e12, l.e21 + r.e21, l.e22 + r.e22};
}

QMatrix qmat_sub(const QMatrix& l, const QMatrix& r) {
  return {l.e11 - r.e11, l.e12 - r.e12, l.e21 - r.e21, l.e22 - r.e22};
}

QMatrix qmat_scale(const IntPolynomial& c, const QMatrix& m) {
  return {c * m.e11, c * m.e12, c * m.e21, c * m.e22};
}

std::string to_string(const QMatrix& m) {
  return "[[" + m.e11.str() + ", " + m.e12.str() + "], [" + m.e21.str() + ", " + m.e22.str() + "]]";
}

}  // namespace qmarkoff
