#include "falcert/cusp.hpp"

#include <numeric>

namespace falcert {

Interval CuspShape::area() const { return r * lambda * sin(theta); }

CuspShape make_cusp_shape(const Interval& r, const Interval& theta,
                          const Interval& lambda) {
  if (!(r.lo() > 0.0)) throw InvalidInput("cusp meridian length must be > 0");
  if (!(lambda.lo() > 0.0)) throw InvalidInput("cusp longitude length must be > 0");
  if (!(theta.lo() > 0.0) || !certainly_lt(theta, int_pi()))
    throw InvalidInput("cusp angle must lie in (0, pi)");
  CuspShape c{r, theta, lambda};
  if (!(c.area().lo() > 0.0)) throw InvalidInput("cusp area not certified positive");
  return c;
}

Slope make_slope(long long p, long long q) {
  if (p == 0 && q == 0) throw InvalidInput("slope (0,0) is not a curve");
  long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
  if (g != 1) throw InvalidInput("slope coordinates must be coprime");
  return Slope{p, q};
}

MultiSlope make_multi_slope(int unfilled,
                            std::vector<std::pair<int, Slope>> fillings) {
  for (std::size_t i = 0; i < fillings.size(); ++i) {
    if (fillings[i].first == unfilled)
      throw InvalidInput("unfilled cusp listed among fillings");
    for (std::size_t j = i + 1; j < fillings.size(); ++j)
      if (fillings[i].first == fillings[j].first)
        throw InvalidInput("duplicate cusp index in multi-slope");
  }
  return MultiSlope{unfilled, std::move(fillings)};
}

Interval euclidean_length_sq(const CuspShape& c, const Slope& s) {
  Interval p(double(s.p)), q(double(s.q));
  return p * p * c.r * c.r + q * q * c.lambda * c.lambda +
         Interval(2.0) * p * q * c.r * c.lambda * cos(c.theta);
}

Interval normalized_length_sq(const CuspShape& c, const Slope& s) {
  return euclidean_length_sq(c, s) / c.area();
}

Interval normalized_length_sq_lower_bound(const CuspShape& c, const Slope& s) {
  Interval p(double(s.p)), q(double(s.q));
  Interval sin_t = sin(c.theta);
  Interval main = (p * p * c.r * c.r + q * q * c.lambda * c.lambda) /
                  (c.r * c.lambda * sin_t);
  Interval cot = cos(c.theta) / sin_t;
  return main - abs(p * q * cot);
}

bool cross_term_sign_ok(const CuspShape& c, const Slope& s) {
  double pq = double(s.p) * double(s.q);
  Interval ct = cos(c.theta);
  if (pq == 0.0) return true;
  return pq > 0.0 ? ct.lo() >= 0.0 : ct.hi() <= 0.0;
}

Interval purcell_normalized_length_sq(long long q) {
  if (q == 0) throw ZeroQ();
  return Interval(2.0) * Interval(double(q < 0 ? -q : q));
}

Interval l4_normalized_length_sq_lower_bound(long long q) {
  if (q == 0) throw ZeroQ();
  long long aq = q < 0 ? -q : q;
  if (aq < 3) throw OutOfRange("octahedral-family bound needs |q| >= 3");
  Interval qq{double(aq)};
  return (Interval(1.0) + Interval(4.0) * qq * qq) / Interval(6.0) - qq;
}

Interval l4_inverse_normalized_length_sq(long long q) {
  if (q == 0) throw ZeroQ();
  long long aq = q < 0 ? -q : q;
  if (aq < 3) throw OutOfRange("octahedral-family bound needs |q| >= 3");
  Interval qm{double(aq - 1)};
  return Interval(3.0) / (Interval(2.0) * qm * qm);
}

const char* bound_mode_name(BoundMode m) {
  switch (m) {
    case BoundMode::Exact: return "exact";
    case BoundMode::PaperBound: return "paper-bound";
    case BoundMode::Purcell: return "purcell";
    case BoundMode::L4: return "l4";
  }
  throw InternalError("unknown bound mode");
}

BoundMode bound_mode_from_name(const std::string& name) {
  if (name == "exact") return BoundMode::Exact;
  if (name == "paper-bound") return BoundMode::PaperBound;
  if (name == "purcell") return BoundMode::Purcell;
  if (name == "l4") return BoundMode::L4;
  throw InvalidInput("unknown bound mode '" + name + "'");
}

Interval total_inverse_normalized_length_sq(
    const std::vector<std::optional<CuspShape>>& cusps, const MultiSlope& ms,
    BoundMode mode) {
  Interval total(0.0);
  for (const auto& [idx, slope] : ms.fillings) {
    Interval inv_sq;
    switch (mode) {
      case BoundMode::Exact:
      case BoundMode::PaperBound: {
        if (idx < 0 || std::size_t(idx) >= cusps.size() || !cusps[idx])
          throw MissingCuspData("no cusp shape for filled cusp " +
                                std::to_string(idx));
        // The printed bound is only implied by the exact value when
        // p q cos(theta) >= 0; refusing outside that regime keeps the
        // certificate one-sided (exact mode stays available).
        if (mode == BoundMode::PaperBound &&
            !cross_term_sign_ok(*cusps[idx], slope))
          throw GuardViolated(
              "sign condition p q cos(theta) >= 0 not certified for cusp " +
              std::to_string(idx) + "; the printed bound is not implied");
        Interval len_sq = mode == BoundMode::Exact
                              ? normalized_length_sq(*cusps[idx], slope)
                              : normalized_length_sq_lower_bound(*cusps[idx], slope);
        if (!(len_sq.lo() > 0.0))
          throw GuardViolated("normalized length bound not certified positive");
        inv_sq = Interval(1.0) / len_sq;
        break;
      }
      case BoundMode::Purcell:
        inv_sq = Interval(1.0) / purcell_normalized_length_sq(slope.q);
        break;
      case BoundMode::L4:
        inv_sq = l4_inverse_normalized_length_sq(slope.q);
        break;
    }
    total += inv_sq;
  }
  return total;
}

long long CuspTiling::longitude_lower_bound() const {
  return kind == Kind::Planar ? tiles : 2;
}

CuspTiling cusp_tiling_planar(long long m) {
  if (m < 1) throw InvalidM();
  return CuspTiling{CuspTiling::Kind::Planar, 2 * m, Interval(2.0)};
}

CuspTiling cusp_tiling_crossing_circle() {
  return CuspTiling{CuspTiling::Kind::CrossingCircle, 2, Interval(2.0)};
}

Interval twist_region_slope_length_sq_lower_bound(long long crossings) {
  if (crossings < 0) throw InvalidInput("crossing count must be >= 0");
  Interval c{double(crossings)};
  return c * c + Interval(1.0);
}

}  // namespace falcert
