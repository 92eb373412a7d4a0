#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "atlab/errors.hpp"

namespace atlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (optional sign, decimal digits). q must be nonzero.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    require(den != 0, Errc::BadInput, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::exception& e) {
    fail(Errc::BadInput, "cannot parse rational '" + s + "'");
  }
}

/// Canonical form: "p" for integers, "p/q" otherwise, q > 0.
inline std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Every double is a binary rational; the conversion is exact.
inline Rational rational_from_double(double d) { return Rational(d); }

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace atlab
