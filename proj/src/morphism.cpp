#include "qmarkoff/morphism.hpp"

#include <cctype>

#include "qmarkoff/errors.hpp"

namespace qmarkoff {

IntMatrix2 operator*(const IntMatrix2& l, const IntMatrix2& r) {
  return {l.e11 * r.e11 + l.e12 * r.e21, l.e11 * r.e12 + l.e12 * r.e22,
          l.e21 * r.e11 + l.e22 * r.e21, l.e21 * r.e12 + l.e22 * r.e22};
}

std::string to_string(const IntMatrix2& m) {
  return "[[" + m.e11.str() + ", " + m.e12.str() + "], [" + m.e21.str() + ", " + m.e22.str() + "]]";
}

IntMatrix2 mu(const BinaryWord& w) {
  static const IntMatrix2 mu_a{2, 1, 1, 1};
  static const IntMatrix2 mu_b{5, 2, 2, 1};
  IntMatrix2 out = IntMatrix2::identity();
  for (Letter x : w) out = out * (x == Letter::a ? mu_a : mu_b);
  return out;
}

namespace {

IntPolynomial poly(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> cs;
  for (long long c : coeffs) cs.emplace_back(c);
  return IntPolynomial(std::move(cs));
}

}  // namespace

QMatrix mu_q(Letter x) {
  static const QMatrix mu_a{poly({0, 1, 1}), 1, poly({0, 1}), 1};
  static const QMatrix mu_b{poly({0, 1, 2, 1, 1}), poly({1, 1}), poly({0, 1, 1}), 1};
  return x == Letter::a ? mu_a : mu_b;
}

QMatrix mu_q(const BinaryWord& w) {
  QMatrix out = QMatrix::identity();
  for (Letter x : w) out = out * mu_q(x);
  return out;
}

IntPolynomial q_markoff(const BinaryWord& w) { return mu_q(w).e12; }

IntMatrix2 specialize_at_one(const QMatrix& m) {
  auto at_one = [](const IntPolynomial& f) {
    BigInt sum = 0;
    for (const auto& c : f.coefficients()) sum += c;
    return sum;
  };
  return {at_one(m.e11), at_one(m.e12), at_one(m.e21), at_one(m.e22)};
}

namespace {

std::size_t flip_exponent(const BinaryWord& u) {
  return 2 * u.count(Letter::a) + 4 * u.count(Letter::b);
}

}  // namespace

IntPolynomial det_mu_q(const BinaryWord& w) {
  IntPolynomial expected = IntPolynomial::monomial(1, flip_exponent(w));
  if (mu_q(w).det() != expected) {
    throw VerificationFailure("determinant of mu_q(" + w.str() + ") is not q^(2|w|_a+4|w|_b)");
  }
  return expected;
}

const QMatrix& d_q() {
  static const QMatrix d{0, poly({0, 1, 0, 0, 1}), poly({0, 0, -1, 0, 0, -1}), 0};
  return d;
}

QMatrix flip_delta(const BinaryWord& u) {
  const BinaryWord left = reversal(u);
  const QMatrix delta = mu_q(left + word("ba") + u) - mu_q(left + word("ab") + u);
  if (delta != IntPolynomial::monomial(1, flip_exponent(u)) * d_q()) {
    throw VerificationFailure("flip identity violated for u = " + u.str());
  }
  return delta;
}

bool PositivityReport::holds(bool word_is_empty) const {
  const bool core = poly_is_nonneg_nonzero(m) && poly_is_nonneg_nonzero(p) &&
                    poly_is_nonneg_nonzero(expr31) && poly_is_nonneg_nonzero(expr32);
  if (word_is_empty) return core && n.is_zero() && o.is_zero();
  return core && poly_is_nonneg_nonzero(n) && poly_is_nonneg_nonzero(o);
}

PositivityReport positivity_report(const BinaryWord& w) {
  const QMatrix mat = mu_q(w);
  const IntPolynomial q = IntPolynomial::q();
  PositivityReport r{mat.e11, mat.e12, mat.e21, mat.e22, {}, {}};
  r.expr31 = q * r.m - poly({0, 0, 1}) * r.n + r.o;
  r.expr32 = poly({0, 1, 1}) * r.m - poly({0, 0, 1, 1, 1}) * r.n + r.o - q * r.p;
  return r;
}

IntPolynomial delta_last_letter(const BinaryWord& w) {
  return q_markoff(w + Letter::b) - q_markoff(w + Letter::a);
}

WrapDelta delta_wrap(const BinaryWord& w) {
  const IntPolynomial awa = q_markoff(Letter::a + w + Letter::a);
  return {awa - q_markoff(Letter::b + w), q_markoff(Letter::a + w + Letter::b) - awa};
}

IntPolynomial flip_prefix_delta(const BinaryWord& u, const BinaryWord& v) {
  if (!u.starts_with(v) && !v.starts_with(u)) {
    throw PreconditionError("prefix precondition violated: neither '" + u.str() + "' nor '" +
                            v.str() + "' is a prefix of the other");
  }
  const BinaryWord left = reversal(u);
  return q_markoff(left + word("ba") + v) - q_markoff(left + word("ab") + v);
}

TreePath TreePath::parse(std::string_view text) {
  TreePath path;
  for (char c : text) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'L':
        path.steps.push_back(Step::left);
        break;
      case 'R':
        path.steps.push_back(Step::right);
        break;
      default:
        throw PreconditionError("malformed tree path '" + std::string(text) + "'");
    }
  }
  return path;
}

std::string TreePath::str() const {
  std::string out;
  for (Step s : steps) out.push_back(s == Step::left ? 'L' : 'R');
  return out;
}

std::vector<TreePath> paths_at_depth(std::size_t depth) {
  std::vector<TreePath> level{TreePath{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<TreePath> next;
    next.reserve(level.size() * 2);
    for (const auto& p : level) {
      for (Step s : {Step::left, Step::right}) {
        TreePath child = p;
        child.steps.push_back(s);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return level;
}

ChristoffelNode christoffel_node(const TreePath& path) {
  BinaryWord u{Letter::a};
  BinaryWord v{Letter::b};
  for (Step s : path.steps) {
    if (s == Step::left) {
      v = u + v;
    } else {
      u = u + v;
    }
  }
  return {u, v, u + v};
}

std::string MarkoffTriple::str() const {
  return "(" + x.str() + "," + y.str() + "," + z.str() + ")";
}

MarkoffTriple markoff_triple(const TreePath& path) {
  MarkoffTriple t{1, 5, 2};
  for (Step s : path.steps) {
    if (s == Step::left) {
      t = {t.x, 3 * t.x * t.y - t.z, t.y};
    } else {
      t = {t.y, 3 * t.y * t.z - t.x, t.z};
    }
  }
  return t;
}

}  // namespace qmarkoff
