#ifndef FALCERT_SCALAR_HPP
#define FALCERT_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "falcert/errors.hpp"

namespace falcert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", integers, and plain decimals ("16.5", "-0.0001") exactly.
Rational rational_from_string(const std::string& s);

std::string rational_to_string(const Rational& q);

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Nearest integer to p/q; on a half-integer tie returns the *pair* via the
// bool flag so callers can apply their own tie rule.
struct NearestInt {
  BigInt value;  // the floor-side candidate on ties
  bool tie;      // true iff p/q is exactly a half-integer
};
NearestInt nearest_int(const Rational& x);

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor_rational(const Rational& x) {
  return floor_div(numerator(x), denominator(x));
}

}  // namespace falcert

#endif
