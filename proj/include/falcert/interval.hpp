#ifndef FALCERT_INTERVAL_HPP
#define FALCERT_INTERVAL_HPP

#include <cmath>
#include <string>

#include "falcert/errors.hpp"
#include "falcert/scalar.hpp"

namespace falcert {

// Closed interval [lo, hi] of doubles with outward rounding on every
// operation.  IEEE arithmetic is correctly rounded, so stepping each endpoint
// one ulp outward after a round-to-nearest computation yields a rigorous
// enclosure.  Transcendental functions are evaluated from series with
// explicit tail bounds; libm is never trusted for enclosures.
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}
  explicit Interval(double x) : lo_(x), hi_(x) { check(); }
  Interval(double lo, double hi) : lo_(lo), hi_(hi) { check(); }

  static Interval hull(double a, double b) {
    return a <= b ? Interval(a, b) : Interval(b, a);
  }
  static Interval from_rational(const Rational& q);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double width() const { return hi_ - lo_; }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool is_point() const { return lo_ == hi_; }

  Interval operator-() const { return Interval(-hi_, -lo_); }
  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  friend Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
  friend Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
  friend Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
  friend Interval operator/(double a, const Interval& b) { return Interval(a) / b; }
  Interval operator+(double b) const { return *this + Interval(b); }
  Interval operator-(double b) const { return *this - Interval(b); }
  Interval operator*(double b) const { return *this * Interval(b); }
  Interval operator/(double b) const { return *this / Interval(b); }

 private:
  void check() const {
    if (!(lo_ <= hi_)) throw InternalError("inverted interval endpoints");
  }
  double lo_, hi_;
};

Interval sqrt(const Interval& x);
Interval abs(const Interval& x);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval pow_int(const Interval& x, unsigned n);
Interval exp(const Interval& x);
Interval log(const Interval& x);   // requires x.lo() > 0
Interval cosh(const Interval& x);
Interval sin(const Interval& x);   // requires |x| <= 4
Interval cos(const Interval& x);   // requires |x| <= 4

// Certified enclosures of constants.
Interval int_pi();
Interval int_log2();
Interval int_log3();
Interval int_sqrt3();

// zeta(2n) by Euler-Maclaurin with a rigorous remainder envelope.
Interval zeta_even(unsigned n);

// Lobachevsky function Lambda(theta) = -int_0^theta log|2 sin t| dt for
// 0 < theta <= pi/2, via the series
//   Lambda(t) = t - t log(2t) + sum_{n>=1} zeta(2n) t^{2n+1} / (n(2n+1) pi^{2n}).
Interval lobachevsky(const Interval& theta);

// Volume of the regular ideal hyperbolic tetrahedron, 3*Lambda(pi/3).
// Enclosure width <= 1e-12.
Interval regular_ideal_tet_volume();

// Certified order predicates.  The "certainly" forms decide the relation for
// every pair of points in the operands.
inline bool certainly_lt(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }
inline bool certainly_le(const Interval& a, const Interval& b) { return a.hi() <= b.lo(); }
inline bool possibly_lt(const Interval& a, const Interval& b) { return a.lo() < b.hi(); }

// Shortest decimal string that parses back to exactly the same double, so a
// printed [lo,hi] pair denotes the enclosure verbatim.
std::string double_to_string(double x);
std::string interval_to_string(const Interval& x);

}  // namespace falcert

#endif
