#ifndef FALCERT_LATTICE_HPP
#define FALCERT_LATTICE_HPP

#include <array>
#include <cstdint>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "falcert/errors.hpp"
#include "falcert/interval.hpp"
#include "falcert/scalar.hpp"

namespace falcert {

// 2-D lattice geometry over an exact or certified scalar.  S = Rational gives
// exact arithmetic (the default for all lattice work); S = Interval supports
// inputs with irrational coordinates; S = long long backs the brute-force
// oracle on integer data.

template <class S>
struct Vec2 {
  S x{}, y{};

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 scaled(const S& k) const { return {x * k, y * k}; }
};

template <class S>
S dot(const Vec2<S>& a, const Vec2<S>& b) {
  return a.x * b.x + a.y * b.y;
}

template <class S>
S norm_sq(const Vec2<S>& v) {
  return dot(v, v);
}

template <class S>
S det(const Vec2<S>& u, const Vec2<S>& v) {
  return u.x * v.y - u.y * v.x;
}

// Scalar plumbing that differs between exact and interval arithmetic.
template <class S>
struct LatticeScalar;

template <>
struct LatticeScalar<Rational> {
  static bool lt(const Rational& a, const Rational& b) { return a < b; }
  static bool le(const Rational& a, const Rational& b) { return a <= b; }
  static bool is_zero(const Rational& a) { return a == 0; }
  static Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }
  static Rational half(const Rational& a) { return a / 2; }
};

template <>
struct LatticeScalar<Interval> {
  // Certified comparisons: "lt" means certainly less; an ambiguous relation
  // reads as false, which only ever makes the reduction loop stop early --
  // the final verification still decides validity.
  static bool lt(const Interval& a, const Interval& b) { return certainly_lt(a, b); }
  static bool le(const Interval& a, const Interval& b) { return certainly_le(a, b); }
  static bool is_zero(const Interval& a) { return a.is_point() && a.lo() == 0.0; }
  static Interval abs(const Interval& a) { return falcert::abs(a); }
  static Interval half(const Interval& a) { return a * Interval(0.5); }
};

template <>
struct LatticeScalar<long long> {
  static bool lt(long long a, long long b) { return a < b; }
  static bool le(long long a, long long b) { return a <= b; }
  static bool is_zero(long long a) { return a == 0; }
  static long long abs(long long a) { return a < 0 ? -a : a; }
};

template <class S>
struct TranslationLattice {
  Vec2<S> u, v;
  S covolume_signed() const { return det(u, v); }
};

// A basis attaining the successive minima of the lattice (Minkowski
// convention): |a| is minimal among nonzero vectors, |b| minimal among
// vectors independent from a.
template <class S>
struct GeometricBasis {
  Vec2<S> a, b;
  S covolume_signed() const { return det(a, b); }
};

namespace detail {

// In rank 2 the Lagrange conditions |a| <= |b|, 2|<a,b>| <= |a|^2 are
// equivalent to {a,b} attaining the successive minima.
template <class S>
bool lagrange_conditions(const Vec2<S>& a, const Vec2<S>& b) {
  using T = LatticeScalar<S>;
  S na = norm_sq(a), nb = norm_sq(b);
  S two_abs_d = T::abs(dot(a, b));
  two_abs_d = two_abs_d + two_abs_d;
  return T::le(na, nb) && T::le(two_abs_d, na);
}

}  // namespace detail

// Greedy (Lagrange) reduction.  Deterministic tie rules, exact scalars:
//   - when |b - t a| is minimized at two integers t, pick the one giving
//     <a, b'> >= 0;
//   - final representatives are sign-normalized lex-positive, the boundary
//     case 2<a,b> = -|a|^2 is flipped to +, and an |a| = |b| tie is ordered
//     with a lexicographically greater.
inline GeometricBasis<Rational> reduce_basis(const TranslationLattice<Rational>& lat) {
  if (lat.covolume_signed() == 0) throw DegenerateLattice();
  Vec2<Rational> a = lat.u, b = lat.v;
  if (norm_sq(b) < norm_sq(a)) std::swap(a, b);
  for (;;) {
    Rational na = norm_sq(a);
    Rational mu = dot(b, a) / na;
    // On a half-integer tie both floor and ceil minimize |b - t a|; the
    // floor side gives <a, b'> = +|a|^2/2, the representative we keep.
    NearestInt t = nearest_int(mu);
    Vec2<Rational> b2 = b - a.scaled(Rational(t.value));
    Rational nb2 = norm_sq(b2);
    if (nb2 < na) {
      b = a;
      a = b2;
      continue;
    }
    b = b2;
    break;
  }

  auto lex_positive = [](const Vec2<Rational>& v) {
    return v.x > 0 || (v.x == 0 && v.y > 0);
  };
  if (!lex_positive(a)) a = -a;
  if (!lex_positive(b)) b = -b;
  Rational na = norm_sq(a);
  Rational d = dot(a, b);
  if (d + d == -na) b = b + a;  // tie representative with <a,b> >= 0
  if (na == norm_sq(b)) {
    bool a_lex_ge = (a.x > b.x) || (a.x == b.x && a.y >= b.y);
    if (!a_lex_ge) std::swap(a, b);
  }
  if (!detail::lagrange_conditions(a, b))
    throw InternalError("reduction postcondition failed");
  return {a, b};
}

// Interval-scalar reduction: candidate shifts come from midpoint estimates
// and are only accepted on a certified strict improvement; the result is
// valid iff the Lagrange conditions certify at the end.
inline GeometricBasis<Interval> reduce_basis(const TranslationLattice<Interval>& lat) {
  Interval dcv = lat.covolume_signed();
  if (dcv.contains(0.0) && !(dcv.lo() == 0.0 && dcv.hi() == 0.0))
    throw AmbiguousComparison("covolume enclosure contains zero");
  if (dcv.is_point() && dcv.lo() == 0.0) throw DegenerateLattice();

  Vec2<Interval> a = lat.u, b = lat.v;
  if (certainly_lt(norm_sq(b), norm_sq(a))) std::swap(a, b);
  for (int iter = 0; iter < 256; ++iter) {
    Interval na = norm_sq(a);
    double mu = dot(b, a).mid() / na.mid();
    long long t0 = std::llround(mu);
    bool progressed = false;
    for (long long t : {t0, t0 - 1, t0 + 1}) {
      if (t == 0) continue;
      Vec2<Interval> b2 = b - a.scaled(Interval(double(t)));
      if (certainly_lt(norm_sq(b2), norm_sq(b))) {
        b = b2;
        progressed = true;
        break;
      }
    }
    if (certainly_lt(norm_sq(b), norm_sq(a))) {
      std::swap(a, b);
      continue;
    }
    if (!progressed) break;
  }
  if (!detail::lagrange_conditions(a, b))
    throw AmbiguousComparison("could not certify a geometric basis for this enclosure");
  return {a, b};
}

// Exhaustive oracle: scans all n u + m v with |n|, |m| <= bound, then keeps
// doubling the bound until the scan is provably complete for the norms found
// (coefficient bound n^2 <= lambda2^2 max(|u|^2,|v|^2) / det^2).
template <class S>
GeometricBasis<S> brute_force_shortest(const TranslationLattice<S>& lat, long long bound) {
  using T = LatticeScalar<S>;
  if (bound < 2) throw InvalidInput("brute force bound must be >= 2");
  S D = det(lat.u, lat.v);
  if (T::is_zero(D)) throw DegenerateLattice();

  for (int pass = 0; pass < 24; ++pass) {
    auto at = [&](long long n, long long m) {
      return Vec2<S>{lat.u.x * S(n) + lat.v.x * S(m),
                     lat.u.y * S(n) + lat.v.y * S(m)};
    };
    std::optional<Vec2<S>> best1;
    for (long long n = -bound; n <= bound; ++n)
      for (long long m = -bound; m <= bound; ++m) {
        if (n == 0 && m == 0) continue;
        Vec2<S> w = at(n, m);
        if (!best1 || T::lt(norm_sq(w), norm_sq(*best1))) best1 = w;
      }
    std::optional<Vec2<S>> best2;
    for (long long n = -bound; n <= bound; ++n)
      for (long long m = -bound; m <= bound; ++m) {
        if (n == 0 && m == 0) continue;
        Vec2<S> w = at(n, m);
        if (T::is_zero(det(*best1, w))) continue;
        if (!best2 || T::lt(norm_sq(w), norm_sq(*best2))) best2 = w;
      }
    if (best1 && best2) {
      // Completeness: any w with |w|^2 <= lambda2^2 satisfies
      // |n| <= |w||v|/|det| and |m| <= |w||u|/|det|.
      S l2 = norm_sq(*best2);
      S mx = norm_sq(lat.u);
      if (T::lt(mx, norm_sq(lat.v))) mx = norm_sq(lat.v);
      S need_sq = l2 * mx;
      S have_sq = D * D * S(bound) * S(bound);
      if (T::le(need_sq, have_sq)) return {*best1, *best2};
    }
    bound *= 2;
  }
  throw InternalError("brute force oracle failed to stabilize");
}

// The kernels of the three surjections Z x Z -> Z/2Z.
template <class S>
std::array<TranslationLattice<S>, 3> index_two_sublattices(const TranslationLattice<S>& lat) {
  using T = LatticeScalar<S>;
  if (T::is_zero(det(lat.u, lat.v))) throw DegenerateLattice();
  const Vec2<S>& u = lat.u;
  const Vec2<S>& v = lat.v;
  return {TranslationLattice<S>{u + u, v}, TranslationLattice<S>{u, v + v},
          TranslationLattice<S>{u + v, u + u}};
}

// Inverse view: the three lattices containing lat with index 2.
template <class S>
std::array<TranslationLattice<S>, 3> index_two_superlattices(const TranslationLattice<S>& lat) {
  using T = LatticeScalar<S>;
  if (T::is_zero(det(lat.u, lat.v))) throw DegenerateLattice();
  Vec2<S> uh{T::half(lat.u.x), T::half(lat.u.y)};
  Vec2<S> vh{T::half(lat.v.x), T::half(lat.v.y)};
  Vec2<S> sh{T::half(lat.u.x + lat.v.x), T::half(lat.u.y + lat.v.y)};
  return {TranslationLattice<S>{uh, lat.v}, TranslationLattice<S>{lat.u, vh},
          TranslationLattice<S>{sh, lat.u}};
}

// Exact membership test (Cramer).
inline bool contains(const TranslationLattice<Rational>& lat, const Vec2<Rational>& w) {
  Rational D = det(lat.u, lat.v);
  if (D == 0) throw DegenerateLattice();
  Rational n = det(w, lat.v) / D;
  Rational m = det(lat.u, w) / D;
  return denominator(n) == 1 && denominator(m) == 1;
}

// Checked constructor for bases claimed geometric.
template <class S>
GeometricBasis<S> geometric_basis_checked(const Vec2<S>& a, const Vec2<S>& b) {
  using T = LatticeScalar<S>;
  if (T::is_zero(det(a, b))) throw DegenerateLattice();
  if (!detail::lagrange_conditions(a, b))
    throw InvalidInput("pair is not a geometric basis (successive minima not attained)");
  return {a, b};
}

// ---- Index-2 quotient case analysis -------------------------------------

struct QuotientForm {
  int case_id;        // 1, 2, 3
  std::string label;  // e.g. "{a,2b}", "{b,b-2a}", "{a+b,2a}"
  GeometricBasis<Rational> basis;
  TranslationLattice<Rational> sublattice;
};

// For each index-2 sublattice of <a1,b1>, reduces it and reports which
// candidate form it matches, up to sign and order.  Matching compares the
// multiset of squared lengths plus covolume, since geometric bases are only
// unique up to sign/order.
std::array<QuotientForm, 3> classify_quotient_basis(const GeometricBasis<Rational>& g1);

// ---- Quotient slope-length bound -----------------------------------------

template <class S>
struct SuperlatticeReport {
  TranslationLattice<S> superlattice;
  GeometricBasis<S> basis;
  S max_norm_sq;   // max(|a1|^2, |b1|^2)
  S margin_sq;     // max_norm_sq - 36
  bool passed;
};

template <class S>
struct QuotientBoundReport {
  std::array<SuperlatticeReport<S>, 3> entries;
  bool all_passed;
};

// Requires |a2| = 2 and |b2| > 16 on a geometric basis; asserts that every
// index-2 superlattice has a geometric basis with max(|a1|, |b1|) > 6.
template <class S>
QuotientBoundReport<S> check_quotient_bound(const GeometricBasis<S>& g2);

namespace detail {

inline bool norm_sq_is(const Rational& v, long long w) { return v == w; }
inline bool norm_sq_is(const Interval& v, long long w) {
  return v.is_point() && v.lo() == double(w);
}
inline bool norm_sq_gt(const Rational& v, long long w) { return v > w; }
inline bool norm_sq_gt(const Interval& v, long long w) { return v.lo() > double(w); }

}  // namespace detail

template <class S>
QuotientBoundReport<S> check_quotient_bound(const GeometricBasis<S>& g2) {
  using T = LatticeScalar<S>;
  S na = norm_sq(g2.a), nb = norm_sq(g2.b);
  if (!detail::norm_sq_is(na, 4))
    throw HypothesisViolated("|a2| = 2 required (|a2|^2 = 4 not certified)");
  if (!detail::norm_sq_gt(nb, 256))
    throw HypothesisViolated("|b2| > 16 required (|b2|^2 > 256 not certified)");

  TranslationLattice<S> lat{g2.a, g2.b};
  auto supers = index_two_superlattices(lat);
  QuotientBoundReport<S> report;
  report.all_passed = true;
  for (int i = 0; i < 3; ++i) {
    GeometricBasis<S> g1 = reduce_basis(supers[i]);
    S mx = norm_sq(g1.a);
    if (T::lt(mx, norm_sq(g1.b))) mx = norm_sq(g1.b);
    bool ok = detail::norm_sq_gt(mx, 36);
    if (!ok) report.all_passed = false;
    report.entries[i] = {supers[i], g1, mx, mx - S(36), ok};
  }
  if (!report.all_passed)
    throw BoundViolated("index-2 superlattice with max(|a1|,|b1|) <= 6");
  return report;
}

}  // namespace falcert

#endif
