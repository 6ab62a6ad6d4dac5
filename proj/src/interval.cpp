#include "falcert/interval.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <limits>
#include <mutex>
#include <vector>

namespace falcert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double up(double x) { return std::nextafter(x, kInf); }
double dn(double x) { return std::nextafter(x, -kInf); }

// Rounding-error-aware directed bounds: TwoSum / FMA recover the exact
// rounding error of + and *, so exact machine results stay exact (integer
// lattice data keeps point intervals through ring operations).
double sum_err(double a, double b, double s) {
  double bv = s - a;
  double av = s - bv;
  return (a - av) + (b - bv);
}

double add_lo(double a, double b) {
  double s = a + b;
  return sum_err(a, b, s) >= 0.0 ? s : dn(s);
}
double add_hi(double a, double b) {
  double s = a + b;
  return sum_err(a, b, s) <= 0.0 ? s : up(s);
}

void mul_bounds(double a, double b, double& lo, double& hi) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  lo = err >= 0.0 ? p : dn(p);
  hi = err <= 0.0 ? p : up(p);
}

}  // namespace

Interval Interval::operator+(const Interval& o) const {
  return Interval(add_lo(lo_, o.lo_), add_hi(hi_, o.hi_));
}

Interval Interval::operator-(const Interval& o) const {
  return Interval(add_lo(lo_, -o.hi_), add_hi(hi_, -o.lo_));
}

Interval Interval::operator*(const Interval& o) const {
  const double xs[2] = {lo_, hi_};
  const double ys[2] = {o.lo_, o.hi_};
  double mn = kInf, mx = -kInf;
  for (double x : xs)
    for (double y : ys) {
      double lo, hi;
      mul_bounds(x, y, lo, hi);
      mn = std::min(mn, lo);
      mx = std::max(mx, hi);
    }
  return Interval(mn, mx);
}

Interval Interval::operator/(const Interval& o) const {
  if (o.lo_ <= 0.0 && o.hi_ >= 0.0)
    throw Error("interval division by an interval containing zero");
  const double xs[2] = {lo_, hi_};
  const double ys[2] = {o.lo_, o.hi_};
  double mn = kInf, mx = -kInf;
  for (double x : xs)
    for (double y : ys) {
      double q = x / y;
      // true quotient - q = -fma(q, y, -x) / y
      double r = std::fma(q, y, -x);
      bool exact = r == 0.0;
      mn = std::min(mn, exact ? q : dn(q));
      mx = std::max(mx, exact ? q : up(q));
    }
  return Interval(mn, mx);
}

Interval Interval::from_rational(const Rational& q) {
  double d = q.convert_to<double>();
  double lo = dn(d), hi = up(d);
  // Verify the enclosure exactly (double -> rational is exact) and widen if
  // the conversion rounded further than one ulp.
  while (Rational(lo) > q) lo = dn(lo);
  while (Rational(hi) < q) hi = up(hi);
  if (Rational(d) == q) return Interval(d);
  return Interval(lo, hi);
}

Interval sqrt(const Interval& x) {
  if (x.hi() < 0.0) throw Error("sqrt of a negative interval");
  // Tolerate a slightly negative lower endpoint when the enclosed quantity is
  // known nonnegative: intersect with [0, inf).
  double xl = std::max(0.0, x.lo());
  double rl = std::sqrt(xl), rh = std::sqrt(x.hi());
  if (std::fma(rl, rl, -xl) > 0.0) rl = dn(rl);
  if (std::fma(rh, rh, -x.hi()) < 0.0) rh = up(rh);
  return Interval(rl, rh);
}

Interval abs(const Interval& x) {
  if (x.lo() >= 0.0) return x;
  if (x.hi() <= 0.0) return -x;
  return Interval(0.0, std::max(-x.lo(), x.hi()));
}

Interval min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval pow_int(const Interval& x, unsigned n) {
  Interval r(1.0);
  Interval base = x;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  // Even powers of intervals straddling zero are handled correctly by the
  // product form only up to sign pessimism; that is sound, just not tight.
  return r;
}

namespace {

Interval symmetric_tail(const Interval& bound) {
  double t = bound.hi();
  return Interval(-t, t);
}

// exp on |x| <= 0.75 by Taylor series with an explicit tail bound.
Interval exp_small(const Interval& x) {
  constexpr int N = 26;
  Interval sum(1.0);
  Interval term(1.0);
  for (int k = 1; k <= N; ++k) {
    term = term * x / Interval(double(k));
    sum = sum + term;
  }
  // |tail| <= |x|^(N+1)/(N+1)! * 1/(1 - |x|/(N+2)) for |x| < N+2.
  Interval m(std::max(std::fabs(x.lo()), std::fabs(x.hi())));
  Interval num(1.0);
  for (int k = 1; k <= N + 1; ++k) num = num * m / Interval(double(k));
  Interval tail = num / (Interval(1.0) - m / Interval(double(N + 2)));
  return sum + symmetric_tail(tail);
}

Interval exp_point(double x) {
  int halvings = 0;
  Interval y(x);
  while (std::max(std::fabs(y.lo()), std::fabs(y.hi())) > 0.75) {
    y = y / Interval(2.0);
    ++halvings;
  }
  Interval r = exp_small(y);
  for (int i = 0; i < halvings; ++i) r = r * r;
  return r;
}

// log on m in [0.5, 1.5] via 2*atanh((m-1)/(m+1)).
Interval log_near_one(const Interval& m) {
  Interval u = (m - Interval(1.0)) / (m + Interval(1.0));
  constexpr int N = 40;
  Interval u2 = u * u;
  Interval sum = u;
  Interval p = u;
  for (int k = 1; k <= N; ++k) {
    p = p * u2;
    sum = sum + p / Interval(double(2 * k + 1));
  }
  // |tail| <= |u|^(2N+3) / ((2N+3)(1 - u^2)).
  Interval umax(std::max(std::fabs(u.lo()), std::fabs(u.hi())));
  Interval t = pow_int(umax, 2 * N + 3);
  Interval tail = t / (Interval(2.0 * N + 3.0) * (Interval(1.0) - umax * umax));
  return (sum + symmetric_tail(tail)) * Interval(2.0);
}

Interval log_point(double x) {
  if (!(x > 0.0)) throw Error("log of a non-positive value");
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
  return log_near_one(Interval(m)) + Interval(double(e)) * int_log2();
}

// atan(1/n) for integer n >= 2, alternating series.
Interval atan_recip(long n) {
  Interval x = Interval(1.0) / Interval(double(n));
  Interval x2 = x * x;
  Interval sum(0.0);
  Interval p = x;
  int k = 0;
  for (;;) {
    Interval term = p / Interval(double(2 * k + 1));
    double tm = std::max(std::fabs(term.lo()), std::fabs(term.hi()));
    if (tm < 1e-22) {
      // Alternating with decreasing terms: remainder bounded by |term|.
      sum = sum + Interval(-tm, tm);
      break;
    }
    sum = (k % 2 == 0) ? sum + term : sum - term;
    p = p * x2;
    ++k;
    if (k > 200) throw InternalError("atan_recip failed to converge");
  }
  return sum;
}

}  // namespace

Interval exp(const Interval& x) {
  // exp is monotone.
  Interval a = exp_point(x.lo());
  Interval b = exp_point(x.hi());
  return Interval(a.lo(), b.hi());
}

Interval log(const Interval& x) {
  if (x.lo() <= 0.0) throw Error("log needs a strictly positive interval");
  Interval a = log_point(x.lo());
  Interval b = log_point(x.hi());
  return Interval(a.lo(), b.hi());
}

Interval cosh(const Interval& x) {
  Interval e = exp(x);
  Interval r = (e + Interval(1.0) / e) / Interval(2.0);
  // cosh >= 1 always; tighten the spurious low end near x = 0.
  if (r.lo() < 1.0) r = Interval(1.0, r.hi());
  return r;
}

namespace {

// sin/cos by Taylor evaluated in interval arithmetic; valid for |x| <= 4
// with the stated term count.
Interval taylor_tail(const Interval& x, int order) {
  // |x|^order / order!
  Interval m(std::max(std::fabs(x.lo()), std::fabs(x.hi())));
  Interval t(1.0);
  for (int k = 1; k <= order; ++k) t = t * m / Interval(double(k));
  return symmetric_tail(t);
}

Interval sin_series(const Interval& x) {
  constexpr int N = 21;  // terms x^(2k+1)/(2k+1)!, k < N
  Interval x2 = x * x;
  Interval sum = x;
  Interval p = x;
  for (int k = 1; k < N; ++k) {
    p = p * x2 / Interval(double(2 * k) * double(2 * k + 1));
    sum = (k % 2 == 1) ? sum - p : sum + p;
  }
  return sum + taylor_tail(x, 2 * N + 1);
}

Interval cos_series(const Interval& x) {
  constexpr int N = 21;
  Interval x2 = x * x;
  Interval sum(1.0);
  Interval p(1.0);
  for (int k = 1; k < N; ++k) {
    p = p * x2 / Interval(double(2 * k - 1) * double(2 * k));
    sum = (k % 2 == 1) ? sum - p : sum + p;
  }
  return sum + taylor_tail(x, 2 * N);
}

}  // namespace

Interval sin(const Interval& x) {
  if (std::max(std::fabs(x.lo()), std::fabs(x.hi())) > 4.0)
    throw Error("sin enclosure only implemented for |x| <= 4");
  Interval r = sin_series(x);
  return Interval(std::max(r.lo(), -1.0), std::min(r.hi(), 1.0));
}

Interval cos(const Interval& x) {
  if (std::max(std::fabs(x.lo()), std::fabs(x.hi())) > 4.0)
    throw Error("cos enclosure only implemented for |x| <= 4");
  Interval r = cos_series(x);
  return Interval(std::max(r.lo(), -1.0), std::min(r.hi(), 1.0));
}

Interval int_pi() {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
  static const Interval pi =
      Interval(16.0) * atan_recip(5) - Interval(4.0) * atan_recip(239);
  return pi;
}

Interval int_log2() {
  // log 2 = -log(1/2), through the atanh series at u = -1/3.
  static const Interval l2 = -log_near_one(Interval(0.5));
  return l2;
}

Interval int_log3() {
  static const Interval l3 = log(Interval(3.0));
  return l3;
}

Interval int_sqrt3() {
  static const Interval s3 = sqrt(Interval(3.0));
  return s3;
}

Interval zeta_even(unsigned n) {
  static std::mutex cache_mutex;
  static std::vector<Interval> cache;
  if (n == 0) throw InternalError("zeta_even needs n >= 1");
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (n <= cache.size()) return cache[n - 1];
  for (unsigned m = unsigned(cache.size()) + 1; m <= n; ++m) {
    const double s = 2.0 * m;
    const long K = 256;
    Interval sum(0.0);
    for (long k = 1; k < K; ++k) {
      Interval kk{double(k)};
      sum = sum + Interval(1.0) / pow_int(kk, 2 * m);
    }
    // Euler-Maclaurin envelope for sum_{k>=K} k^(-s), f completely monotone:
    //   A - B <= tail <= A,
    //   A = K^(1-s)/(s-1) + K^(-s)/2 + s K^(-s-1)/12,
    //   B = s(s+1)(s+2) K^(-s-3)/720.
    Interval Kd{double(K)};
    Interval Kms = Interval(1.0) / pow_int(Kd, 2 * m);  // K^-s
    Interval A = Kms * Kd / Interval(s - 1.0) + Kms / Interval(2.0) +
                 Interval(s) * Kms / (Kd * Interval(12.0));
    Interval B = Interval(s) * Interval(s + 1.0) * Interval(s + 2.0) * Kms /
                 (pow_int(Kd, 3) * Interval(720.0));
    Interval tail((A - B).lo(), A.hi());
    cache.push_back(sum + tail);
  }
  return cache[n - 1];
}

Interval lobachevsky(const Interval& theta) {
  if (theta.lo() <= 0.0 || theta.hi() > 1.6)
    throw Error("lobachevsky series implemented for 0 < theta <= pi/2");
  Interval pi = int_pi();
  Interval t = theta;
  Interval result = t - t * log(Interval(2.0) * t);
  Interval ratio = (t * t) / (pi * pi);
  constexpr unsigned N = 20;
  Interval rpow = ratio;
  for (unsigned m = 1; m <= N; ++m) {
    result = result + zeta_even(m) * t * rpow /
                          Interval(double(m) * double(2 * m + 1));
    rpow = rpow * ratio;
  }
  // Tail: zeta(2m) <= zeta(2) < 1.645, geometric in ratio.
  if (ratio.hi() >= 0.27)
    throw Error("lobachevsky tail bound needs theta < 0.52*pi");
  Interval rho(ratio.hi());
  Interval tail = Interval(1.645) * Interval(t.hi()) * pow_int(rho, N + 1) /
                  (Interval(double(N + 1)) * Interval(double(2 * N + 3)) *
                   (Interval(1.0) - rho));
  return result + Interval(-tail.hi(), tail.hi());
}

Interval regular_ideal_tet_volume() {
  static const Interval v0 = [] {
    Interval v = Interval(3.0) * lobachevsky(int_pi() / Interval(3.0));
    if (v.width() > 1e-12)
      throw InternalError("v0 enclosure wider than contract");
    return v;
  }();
  return v0;
}

std::string double_to_string(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string interval_to_string(const Interval& x) {
  return "[" + double_to_string(x.lo()) + ", " + double_to_string(x.hi()) + "]";
}

}  // namespace falcert
