#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hc3/integer.hpp"

namespace hc3 {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p" or "p/q". Throws InvalidArgument on malformed input.
Rational parse_rational(const std::string& text);

inline Rational make_rational(Int num, Int den = 1) { return Rational(BigInt(num), BigInt(den)); }

}  // namespace hc3
