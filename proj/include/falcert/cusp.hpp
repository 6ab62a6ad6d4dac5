#ifndef FALCERT_CUSP_HPP
#define FALCERT_CUSP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "falcert/errors.hpp"
#include "falcert/interval.hpp"

namespace falcert {

// Cross-section of a torus cusp: meridian mu = r e^{i theta}, longitude of
// length lambda along the real axis.  Crossing-circle cusps of a fully
// augmented link always have lambda = 2.
struct CuspShape {
  Interval r;       // meridian length, > 0
  Interval theta;   // angle between meridian and longitude, in (0, pi)
  Interval lambda;  // longitude length, > 0

  Interval area() const;  // r * lambda * sin(theta), certified > 0
};

CuspShape make_cusp_shape(const Interval& r, const Interval& theta,
                          const Interval& lambda);

struct Slope {
  long long p = 0, q = 0;
};

Slope make_slope(long long p, long long q);  // requires (p,q) != (0,0), gcd 1

struct MultiSlope {
  int unfilled = 0;
  std::vector<std::pair<int, Slope>> fillings;  // (cusp index, slope)
};

MultiSlope make_multi_slope(int unfilled,
                            std::vector<std::pair<int, Slope>> fillings);

// |p mu + q lambda|^2 = p^2 r^2 + q^2 lambda^2 + 2 p q r lambda cos(theta).
Interval euclidean_length_sq(const CuspShape& c, const Slope& s);

// Normalized length squared: euclidean_length_sq / area.
Interval normalized_length_sq(const CuspShape& c, const Slope& s);

// The plane-geometry lower bound on the normalized length squared:
//   (p^2 r^2 + q^2 lambda^2) / (r lambda sin theta) - |p q cot theta|.
// This is implied by the exact value only when p q cos(theta) >= 0; use
// cross_term_sign_ok to detect the validated regime.
Interval normalized_length_sq_lower_bound(const CuspShape& c, const Slope& s);

// True iff p q cos(theta) >= 0 is certified, the sign condition under which
// the printed lower bound really is a lower bound.
bool cross_term_sign_ok(const CuspShape& c, const Slope& s);

// Crossing-circle 1/q fillings satisfy L_i^2 >= 2|q|.
Interval purcell_normalized_length_sq(long long q);

// Octahedral-family bound for 1/q fillings with |q| >= 3:
//   L_i^2 >= (1 + 4 q^2)/6 - |q|,  hence  1/L_i^2 <= 3 / (2 (|q|-1)^2).
Interval l4_normalized_length_sq_lower_bound(long long q);
Interval l4_inverse_normalized_length_sq(long long q);

// Which per-cusp inequality chain a certificate uses.  The names follow the
// CLI's --mode vocabulary.
enum class BoundMode { Exact, PaperBound, Purcell, L4 };

const char* bound_mode_name(BoundMode m);
BoundMode bound_mode_from_name(const std::string& name);

// 1/L^2 = sum_i 1/L_i^2.  In the three bound modes the result is an upper
// bound on 1/L^2, the safe direction for every certificate.
Interval total_inverse_normalized_length_sq(
    const std::vector<std::optional<CuspShape>>& cusps, const MultiSlope& ms,
    BoundMode mode);

// Cusp-torus tiling by unit-height rectangles.
struct CuspTiling {
  enum class Kind { Planar, CrossingCircle };
  Kind kind;
  long long tiles;
  Interval short_direction_length;  // meridian 2 (planar) / longitude 2 (circle)

  // For a planar cusp each tile column carries a line of full-sized
  // horoballs, and adjacent lines are at distance >= 1, so the longitude is
  // at least the tile count.
  long long longitude_lower_bound() const;
};

CuspTiling cusp_tiling_planar(long long m);  // m >= 1 disk passages -> 2m tiles
CuspTiling cusp_tiling_crossing_circle();
inline CuspTiling cusp_tiling(CuspTiling::Kind kind, long long m = 0) {
  return kind == CuspTiling::Kind::Planar ? cusp_tiling_planar(m)
                                          : cusp_tiling_crossing_circle();
}

// Slope length on a horoball cross-section for a twist region with c
// crossings: length >= sqrt(c^2 + 1).
Interval twist_region_slope_length_sq_lower_bound(long long crossings);

}  // namespace falcert

#endif
