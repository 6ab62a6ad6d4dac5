#ifndef FALCERT_CERTIFIER_HPP
#define FALCERT_CERTIFIER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "falcert/cusp.hpp"
#include "falcert/errors.hpp"
#include "falcert/interval.hpp"
#include "falcert/lattice.hpp"

namespace falcert {

// Coarse geometric invariants of the unfilled manifold; all inputs obtained
// externally (e.g. from a verified hyperbolic-geometry system).
struct FalGeometry {
  Interval volume;                                // > 0
  std::optional<Interval> systole_lower_bound;    // length of shortest geodesic
  int n = 0;                                      // crossing-circle cusps
  bool arithmetic = false;
  std::vector<std::optional<CuspShape>> cusps;    // index 0 = unfilled planar cusp
};

// Declared ahead of TwistedParams, which records the evaluated thresholds.
struct QuantifyThreshold;

enum class Verdict { Pass, Fail, NotApplicable };
const char* verdict_name(Verdict v);

// One row of a certificate's evaluation trace.  `satisfied` is certified with
// outward rounding; `margin` is the worst-case slack (negative when the
// relation could not be certified).
struct Condition {
  std::string name;
  std::string relation;  // "lhs <= rhs", "lhs < rhs", "lhs > rhs", "echo"
  Interval lhs, rhs;
  bool satisfied = false;
  double margin = 0.0;
};

struct Certificate {
  Verdict verdict = Verdict::NotApplicable;
  std::vector<Condition> conditions;
  std::string mode;     // bound mode used, if any
  std::string variant;  // "as-printed" / "corrected", if any
  std::vector<std::pair<std::string, std::string>> inputs;  // echoed

  const Condition* first_violated() const;
};

enum class Variant { AsPrinted, Corrected };
const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

// Exact-decimal constant helper (decimal literals are not binary-exact).
Interval dec(const std::string& s);

// d_N = 4 vol / v0, an upper bound for the degree of any orbifold cover.
Interval orbifold_degree_bound(const Interval& volume);

// For total normalized length L with L^2 >= 61.2, the total core length
// l(Sigma) of the filling geodesics satisfies
//   2 pi / (L^2 + 16.17) < l(Sigma) < 2 pi / (L^2 - 28.78).
// The interval form needs the guard certified from the enclosure; the
// rational form decides the boundary L^2 = 61.2 exactly.
std::pair<Interval, Interval> fps_core_length_bracket(const Interval& L_sq);
std::pair<Interval, Interval> fps_core_length_bracket(const Rational& L_sq);

// C(eps) = eps^5 / (6771 cosh^5(0.6 eps + 0.1475)), for 0 < eps <= log 3.
Interval geometry_constant_C(const Interval& epsilon);

// Upper bound required of 1/L^2 so the core geodesics land in the
// eps/d_N-thin part: min{ 1/61.2, eps v0 / (8 pi vol + 28.78 eps v0) }.
Interval exp_thin_threshold(const Interval& epsilon, const Interval& volume);

// Upper bound required of 1/L^2 for an (eps, d_N)-twisted filling:
//   min{ eps v0 / (8 pi vol + 28.78 eps v0), 1/(2 pi / C(eps) + 28.78) }.
// The statement's conservative 1/(...) form is used for verdicts; the
// proof-text variant 2/(...) is exposed for the trace.
struct QuantifyThreshold {
  Interval value;          // the min, used by certificates
  Interval volume_term;    // eps v0 / (8 pi vol + 28.78 eps v0)
  Interval geometry_term;  // 1 / (2 pi / C + 28.78)
  Interval geometry_term_doubled;  // 2 / (2 pi / C + 28.78)
};
QuantifyThreshold quantify_threshold(const Interval& epsilon, const Interval& volume);

struct TwistedParams {
  Interval epsilon;  // < 3.45
  Interval d_N;      // 4 vol / v0
  // Evaluated right-hand sides; absent when epsilon exceeds log 3.
  std::optional<QuantifyThreshold> thresholds;
};

// Epsilon together with the orbifold-cover degree bound and evaluated
// thresholds of the geometry.
TwistedParams twisted_params(const FalGeometry& fal, const Interval& epsilon);

// Largest admissible epsilon for the geometry: min{systole/1.001, log 3}.
Interval default_epsilon(const FalGeometry& fal);

// Certifies that filling every crossing-circle cusp along 1/q_i produces an
// (eps, d_N)-twisted manifold.  Checks, with outward rounding:
//   (a) eps <= min{systole/1.001, log 3}
//   (b) eps < 3.45
//   (c) sum_i 1/L_i^2 <= quantify threshold   (per the selected bound mode)
// plus the volume > 2 v0 precondition of the degree bound.
// When `epsilon` is empty the default (largest admissible) epsilon is used
// and condition (a) holds by construction.
Certificate certify_twisted_filling(const FalGeometry& fal,
                                    const std::vector<long long>& q_list,
                                    std::optional<Interval> epsilon,
                                    BoundMode mode);

// Smallest q such that the uniform multi-slope (1/q, ..., 1/q) certifies;
// monotone integer search.
long long min_uniform_q(const FalGeometry& fal, std::optional<Interval> epsilon,
                        BoundMode mode);

// Volume-free sufficient condition (vol <= 10 v0 (n-1) for an FAL with n
// crossing circles):  sum <= min{ 2 eps / (80 pi (n-1) + 28.78 eps),
//                                 2 / (2 pi / C(eps) + 28.78) }.
// As printed the left side is sum 1/q_i^2; the corrected variant reads
// sum 1/|q_i|.  Neither is silently preferred.
Certificate fal_sufficient_condition(int n, const Interval& epsilon,
                                     const std::vector<long long>& q_list,
                                     Variant variant);

// Arithmetic specialization at eps = 0.86168:
//   sum 1/|q_i| <= min{ 1.72336 / (80 pi (n-1) + 24.8), 7.963e-6 }
// with the second term recomputed from C(eps); both values are reported.
Certificate arithmetic_sufficient_condition(int n,
                                            const std::vector<long long>& q_list,
                                            bool arithmetic_flag);

// Non-arithmeticity gate: volume > 2 v0 (hence d_N > 8) and
// eps/d_N < 3.45/8 = 0.43125 < 0.43137, the arithmetic shortest-geodesic
// bound.
Certificate nonarithmetic_gate(const Interval& epsilon, const Interval& volume);

// Hypothesis pipeline for the commensurability statement:
//   (a) at least 9 twist regions,
//   (b) at least 6 crossings per region, so filling slopes have length
//       >= sqrt(c^2+1) > 6,
//   (c) planar-cusp longitude >= 2 * twist regions >= 18 > 16,
//   (d) every index-2 quotient slope length > 6 via the lattice bound on the
//       cusp basis (|a2| = 2 meridian, |b2| > 16 longitude).
// When no basis is supplied, (0, 2*twist_regions) is derived for b2.
Certificate certify_commensurability_hypotheses(
    long long twist_regions, long long min_crossings,
    std::optional<GeometricBasis<Rational>> cusp_basis = std::nullopt);

}  // namespace falcert

#endif
