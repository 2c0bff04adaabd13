#include "qmarkoff/spectrum.hpp"

#include <algorithm>

#include "qmarkoff/errors.hpp"
#include "qmarkoff/morphism.hpp"
#include "qmarkoff/parallel.hpp"

namespace qmarkoff {

namespace {

// Rounding in the 50-digit float arithmetic, far below any bracket width.
constexpr double kFloatSlack = 1e-40;

template <class Term>
CfBracket convergents(std::size_t depth, Term term) {
  if (depth < 2) throw PreconditionError("continued fraction depth must be >= 2");
  // h/k for [0; t_0, t_1, ...]
  BigInt h_prev = 1, h = 0;
  BigInt k_prev = 0, k = 1;
  Rational previous;
  for (std::size_t j = 0; j < depth; ++j) {
    const BigInt a = term(j);
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
  }
  Rational last(h, k);
  Rational before(h_prev, k_prev);
  if (last < before) return {std::move(last), std::move(before)};
  return {std::move(before), std::move(last)};
}

BigFloat to_float(const Rational& r) {
  return BigFloat(boost::multiprecision::numerator(r)) / BigFloat(boost::multiprecision::denominator(r));
}

BigFloat midpoint(const CfBracket& b) { return to_float((b.lo + b.hi) / 2); }

double half_width(const CfBracket& b) { return to_float(b.width() / 2).convert_to<double>(); }

}  // namespace

std::vector<unsigned> sigma_subst(const BinaryWord& w) {
  std::vector<unsigned> out;
  out.reserve(2 * w.size());
  for (Letter x : w) {
    const unsigned v = x == Letter::a ? 1 : 2;
    out.push_back(v);
    out.push_back(v);
  }
  return out;
}

PeriodicCF PeriodicCF::make(std::vector<unsigned> period) {
  if (period.empty()) throw PreconditionError("periodic continued fraction needs a nonempty period");
  if (std::find(period.begin(), period.end(), 0u) != period.end()) {
    throw PreconditionError("partial quotients must be positive");
  }
  return PeriodicCF{std::move(period)};
}

unsigned PeriodicCF::at(std::int64_t i) const {
  const auto n = static_cast<std::int64_t>(period.size());
  return period[static_cast<std::size_t>(((i % n) + n) % n)];
}

CfBracket cf_tail(const PeriodicCF& seq, std::int64_t start, std::size_t depth) {
  return convergents(depth, [&](std::size_t j) { return seq.at(start + static_cast<std::int64_t>(j)); });
}

CfBracket cf_tail_backward(const PeriodicCF& seq, std::int64_t start, std::size_t depth) {
  return convergents(depth, [&](std::size_t j) { return seq.at(start - static_cast<std::int64_t>(j)); });
}

SpectrumValue lambda_i(const PeriodicCF& seq, std::int64_t i, std::size_t depth) {
  const CfBracket right = cf_tail(seq, i + 1, depth);
  const CfBracket left = cf_tail_backward(seq, i - 1, depth);
  return {BigFloat(seq.at(i)) + midpoint(right) + midpoint(left),
          half_width(right) + half_width(left) + kFloatSlack};
}

SpectrumValue markoff_supremum(const PeriodicCF& seq, std::size_t depth) {
  const auto values = parallel_map(seq.period.size(), [&](std::size_t i) {
    return lambda_i(seq, static_cast<std::int64_t>(i), depth);
  });
  SpectrumValue best = values.front();
  for (const auto& v : values) {
    if (v.value > best.value) best.value = v.value;
    best.error_bound = std::max(best.error_bound, v.error_bound);
  }
  return best;
}

BigFloat markoff_closed_form(const BigInt& m) {
  if (m <= 0) throw PreconditionError("closed form needs m > 0");
  return boost::multiprecision::sqrt(BigFloat(9 * m * m - 4)) / BigFloat(m);
}

ClosedFormReport closed_form_check(const BinaryWord& w, std::size_t depth) {
  if (!is_christoffel(w)) {
    throw PreconditionError("precondition: Christoffel word required, got '" + w.str() + "'");
  }
  ClosedFormReport r;
  r.word = w;
  r.m = mu(w).e12;
  r.supremum = markoff_supremum(PeriodicCF::make(sigma_subst(w)), depth);
  r.closed_form = markoff_closed_form(r.m);
  r.residual = boost::multiprecision::abs(r.supremum.value - r.closed_form).convert_to<double>();
  r.within_bound = r.residual <= r.supremum.error_bound + kFloatSlack;
  return r;
}

}  // namespace qmarkoff
