#include "falcert/scalar.hpp"

#include <cctype>

namespace falcert {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty numeric string");
  auto bad = [&] { throw InvalidInput("cannot parse number '" + s + "'"); };

  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  std::string intpart, fracpart, denpart;
  std::string* cur = &intpart;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur->push_back(c);
    } else if (c == '.') {
      if (cur != &intpart) bad();
      cur = &fracpart;
    } else if (c == '/') {
      if (cur == &denpart || !fracpart.empty()) bad();
      cur = &denpart;
    } else {
      bad();
    }
  }
  if (intpart.empty() && fracpart.empty()) bad();
  if (cur == &denpart && denpart.empty()) bad();

  BigInt num = intpart.empty() ? BigInt(0) : BigInt(intpart);
  BigInt den(1);
  for (char c : fracpart) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  if (!denpart.empty()) {
    BigInt d(denpart);
    if (d == 0) throw InvalidInput("zero denominator in '" + s + "'");
    den *= d;
  }
  Rational r(num, den);
  return neg ? -r : r;
}

std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

NearestInt nearest_int(const Rational& x) {
  BigInt f = floor_rational(x);
  Rational frac = x - Rational(f);
  if (frac * 2 == 1) return {f, true};
  if (frac * 2 < 1) return {f, false};
  return {f + 1, false};
}

}  // namespace falcert
