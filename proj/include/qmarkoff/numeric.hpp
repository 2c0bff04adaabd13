#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace qmarkoff {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Largest integer not above num/den (den > 0).
BigInt floor_div(const BigInt& num, const BigInt& den);

/// Smallest integer not below num/den (den > 0).
BigInt ceil_div(const BigInt& num, const BigInt& den);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

/// Parses "P", "P/Q", or a decimal such as "-0.01" into an exact rational.
/// Throws PreconditionError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& n);
std::string to_string(const Rational& r);

}  // namespace qmarkoff
