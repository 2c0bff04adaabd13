#include "qmarkoff/numeric.hpp"

#include <cctype>

#include "qmarkoff/errors.hpp"

namespace qmarkoff {

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt quot = num / den;  // truncates toward zero
  if (num % den != 0 && (num < 0) != (den < 0)) quot -= 1;
  return quot;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  return -floor_div(-num, den);
}

BigInt floor(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r),
                   boost::multiprecision::denominator(r));
}

BigInt ceil(const Rational& r) {
  return ceil_div(boost::multiprecision::numerator(r),
                  boost::multiprecision::denominator(r));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw PreconditionError("malformed number '" + std::string(whole) + "'");
  }
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw PreconditionError("malformed number '" + std::string(text) + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
    BigInt frac = frac_part.empty() ? BigInt(0) : BigInt(std::string(frac_part));
    Rational value(whole * scale + frac, scale);
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_integer(text, text));
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const auto& den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

}  // namespace qmarkoff
