#include "falcert/certifier.hpp"

#include <algorithm>

namespace falcert {

namespace {

Condition cond_le(std::string name, const Interval& lhs, const Interval& rhs) {
  bool ok = certainly_le(lhs, rhs);
  return {std::move(name), "lhs <= rhs", lhs, rhs, ok, rhs.lo() - lhs.hi()};
}

Condition cond_lt(std::string name, const Interval& lhs, const Interval& rhs) {
  bool ok = certainly_lt(lhs, rhs);
  return {std::move(name), "lhs < rhs", lhs, rhs, ok, rhs.lo() - lhs.hi()};
}

Condition cond_gt(std::string name, const Interval& lhs, const Interval& rhs) {
  bool ok = certainly_lt(rhs, lhs);
  return {std::move(name), "lhs > rhs", lhs, rhs, ok, lhs.lo() - rhs.hi()};
}

Condition cond_echo(std::string name, const Interval& lhs, const Interval& rhs,
                    bool ok) {
  return {std::move(name), "echo", lhs, rhs, ok, 0.0};
}


std::string q_list_str(const std::vector<long long>& qs) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(qs[i]);
  }
  return out;
}

Verdict settle(const std::vector<Condition>& conds) {
  for (const Condition& c : conds)
    if (!c.satisfied) return Verdict::Fail;
  return Verdict::Pass;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  throw InternalError("unknown verdict");
}

const Condition* Certificate::first_violated() const {
  for (const Condition& c : conditions)
    if (!c.satisfied) return &c;
  return nullptr;
}

const char* variant_name(Variant v) {
  return v == Variant::AsPrinted ? "as-printed" : "corrected";
}

Variant variant_from_name(const std::string& name) {
  if (name == "as-printed") return Variant::AsPrinted;
  if (name == "corrected") return Variant::Corrected;
  throw InvalidInput("unknown variant '" + name + "'");
}

Interval dec(const std::string& s) {
  return Interval::from_rational(rational_from_string(s));
}

Interval orbifold_degree_bound(const Interval& volume) {
  if (!(volume.lo() > 0.0)) throw InvalidInput("volume must be positive");
  return Interval(4.0) * volume / regular_ideal_tet_volume();
}

std::pair<Interval, Interval> fps_core_length_bracket(const Interval& L_sq) {
  if (!certainly_le(dec("61.2"), L_sq))
    throw GuardViolated("core length bracket needs L^2 >= 61.2");
  Interval two_pi = Interval(2.0) * int_pi();
  return {two_pi / (L_sq + dec("16.17")), two_pi / (L_sq - dec("28.78"))};
}

std::pair<Interval, Interval> fps_core_length_bracket(const Rational& L_sq) {
  if (L_sq < rational_from_string("61.2"))
    throw GuardViolated("core length bracket needs L^2 >= 61.2");
  Interval l = Interval::from_rational(L_sq);
  Interval two_pi = Interval(2.0) * int_pi();
  return {two_pi / (l + dec("16.17")), two_pi / (l - dec("28.78"))};
}

Interval geometry_constant_C(const Interval& epsilon) {
  if (!(epsilon.lo() > 0.0))
    throw OutOfRange("epsilon must be certified positive");
  if (epsilon.lo() > int_log3().hi())
    throw OutOfRange("epsilon must be <= log 3");
  Interval c = cosh(dec("0.6") * epsilon + dec("0.1475"));
  return pow_int(epsilon, 5) / (Interval(6771.0) * pow_int(c, 5));
}

Interval exp_thin_threshold(const Interval& epsilon, const Interval& volume) {
  if (!(epsilon.lo() > 0.0) || !(volume.lo() > 0.0))
    throw InvalidInput("epsilon and volume must be positive");
  Interval v0 = regular_ideal_tet_volume();
  Interval ev0 = epsilon * v0;
  Interval second =
      ev0 / (Interval(8.0) * int_pi() * volume + dec("28.78") * ev0);
  return min(Interval(1.0) / dec("61.2"), second);
}

QuantifyThreshold quantify_threshold(const Interval& epsilon, const Interval& volume) {
  if (!(volume.lo() > 0.0)) throw InvalidInput("volume must be positive");
  Interval v0 = regular_ideal_tet_volume();
  Interval ev0 = epsilon * v0;
  Interval volume_term =
      ev0 / (Interval(8.0) * int_pi() * volume + dec("28.78") * ev0);
  Interval denom =
      Interval(2.0) * int_pi() / geometry_constant_C(epsilon) + dec("28.78");
  Interval geometry_term = Interval(1.0) / denom;
  Interval doubled = Interval(2.0) / denom;
  return {min(volume_term, geometry_term), volume_term, geometry_term, doubled};
}

Interval default_epsilon(const FalGeometry& fal) {
  if (!fal.systole_lower_bound) throw MissingSystole();
  return min(*fal.systole_lower_bound / dec("1.001"), int_log3());
}

TwistedParams twisted_params(const FalGeometry& fal, const Interval& epsilon) {
  if (!certainly_lt(epsilon, dec("3.45")))
    throw OutOfRange("epsilon must be below 3.45");
  TwistedParams params{epsilon, orbifold_degree_bound(fal.volume), std::nullopt};
  try {
    params.thresholds = quantify_threshold(epsilon, fal.volume);
  } catch (const OutOfRange&) {
    // epsilon above log 3: admissible for the degree bound, no thresholds.
  }
  return params;
}

Certificate certify_twisted_filling(const FalGeometry& fal,
                                    const std::vector<long long>& q_list,
                                    std::optional<Interval> epsilon,
                                    BoundMode mode) {
  if (int(q_list.size()) != fal.n)
    throw InvalidInput("q list length must equal the number of filled cusps");
  bool eps_by_construction = !epsilon.has_value();
  Interval eps = epsilon ? *epsilon : default_epsilon(fal);

  Certificate cert;
  cert.mode = bound_mode_name(mode);
  cert.inputs = {{"volume", interval_to_string(fal.volume)},
                 {"n", std::to_string(fal.n)},
                 {"q", q_list_str(q_list)},
                 {"epsilon", interval_to_string(eps)}};
  if (fal.systole_lower_bound)
    cert.inputs.emplace_back("systole",
                             interval_to_string(*fal.systole_lower_bound));

  // (a) eps <= min{systole/1.001, log 3}
  Interval admissible = default_epsilon(fal);  // throws MissingSystole
  if (eps_by_construction) {
    cert.conditions.push_back(
        cond_echo("epsilon-admissible (by construction)", eps, admissible, true));
  } else {
    cert.conditions.push_back(cond_le("epsilon-admissible", eps, admissible));
  }

  // (b) eps < 3.45
  cert.conditions.push_back(cond_lt("epsilon-below-3.45", eps, dec("3.45")));

  // Degree-bound precondition vol > 2 v0, with d_N echoed for the trace.
  cert.conditions.push_back(cond_gt(
      "volume-above-2v0", fal.volume,
      Interval(2.0) * regular_ideal_tet_volume()));
  cert.conditions.push_back(cond_echo(
      "degree-bound-d", orbifold_degree_bound(fal.volume), Interval(8.0), true));

  // (c) sum 1/L_i^2 <= threshold.  With epsilon outside (0, log 3] the
  // threshold is undefined and the condition cannot be certified.
  std::vector<std::pair<int, Slope>> fillings;
  for (int i = 0; i < fal.n; ++i)
    fillings.emplace_back(i + 1, make_slope(1, q_list[i]));
  MultiSlope ms = make_multi_slope(0, std::move(fillings));
  Interval total = total_inverse_normalized_length_sq(fal.cusps, ms, mode);
  try {
    QuantifyThreshold thr = quantify_threshold(eps, fal.volume);
    cert.conditions.push_back(
        cond_le("total-inverse-normalized-length", total, thr.value));
    cert.conditions.push_back(
        cond_echo("threshold-volume-term", thr.volume_term, thr.value, true));
    cert.conditions.push_back(cond_echo("threshold-geometry-term",
                                        thr.geometry_term,
                                        thr.geometry_term_doubled, true));
  } catch (const OutOfRange&) {
    cert.conditions.push_back(
        {"total-inverse-normalized-length", "lhs <= rhs", total, Interval(0.0),
         false, 0.0});
  }

  cert.verdict = settle(cert.conditions);
  return cert;
}

long long min_uniform_q(const FalGeometry& fal, std::optional<Interval> epsilon,
                        BoundMode mode) {
  if (mode == BoundMode::Exact || mode == BoundMode::PaperBound)
    throw InvalidInput("min-q search needs a q-only bound mode (purcell or l4)");
  auto passes = [&](long long q) {
    std::vector<long long> qs(std::size_t(fal.n), q);
    return certify_twisted_filling(fal, qs, epsilon, mode).verdict == Verdict::Pass;
  };
  long long lo = mode == BoundMode::L4 ? 3 : 1;
  if (passes(lo)) return lo;
  long long hi = lo;
  while (!passes(hi)) {
    if (hi > (1LL << 46))
      throw GuardViolated("no uniform q certifies below 2^46; geometry conditions fail");
    hi *= 2;
  }
  // Invariant: passes(hi), !passes(lo).
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    (passes(mid) ? hi : lo) = mid;
  }
  return hi;
}

Certificate fal_sufficient_condition(int n, const Interval& epsilon,
                                     const std::vector<long long>& q_list,
                                     Variant variant) {
  if (n < 2) throw OutOfRange("sufficient condition needs n >= 2");
  if (int(q_list.size()) != n) throw InvalidInput("q list length must equal n");
  if (!(epsilon.lo() > 0.0) || epsilon.lo() > int_log3().hi())
    throw OutOfRange("epsilon must lie in (0, log 3]");

  Interval lhs(0.0);
  for (long long q : q_list) {
    if (q == 0) throw ZeroQ();
    Interval aq(double(q < 0 ? -q : q));
    lhs += variant == Variant::AsPrinted ? Interval(1.0) / (aq * aq)
                                         : Interval(1.0) / aq;
  }
  Interval term1 = Interval(2.0) * epsilon /
                   (Interval(80.0) * int_pi() * Interval(double(n - 1)) +
                    dec("28.78") * epsilon);
  Interval term2 = Interval(2.0) /
                   (Interval(2.0) * int_pi() / geometry_constant_C(epsilon) +
                    dec("28.78"));
  Interval rhs = min(term1, term2);

  Certificate cert;
  cert.variant = variant_name(variant);
  cert.inputs = {{"n", std::to_string(n)},
                 {"q", q_list_str(q_list)},
                 {"epsilon", interval_to_string(epsilon)}};
  cert.conditions.push_back(cond_le(
      variant == Variant::AsPrinted ? "sum-inverse-q-squared" : "sum-inverse-q",
      lhs, rhs));
  cert.conditions.push_back(cond_echo("threshold-volume-free-term", term1, rhs, true));
  cert.conditions.push_back(cond_echo("threshold-geometry-term", term2, rhs, true));
  cert.verdict = settle(cert.conditions);
  return cert;
}

Certificate arithmetic_sufficient_condition(int n,
                                            const std::vector<long long>& q_list,
                                            bool arithmetic_flag) {
  if (!arithmetic_flag) throw NotArithmetic();
  if (n < 2) throw OutOfRange("sufficient condition needs n >= 2");
  if (int(q_list.size()) != n) throw InvalidInput("q list length must equal n");

  Interval eps = dec("0.86168");
  Interval lhs(0.0);
  for (long long q : q_list) {
    if (q == 0) throw ZeroQ();
    lhs += Interval(1.0) / Interval(double(q < 0 ? -q : q));
  }
  // Printed specialization constants, plus the geometry term recomputed from
  // C(eps); the verdict uses the recomputed (smaller, conservative) value.
  Interval term1 = dec("1.72336") /
                   (Interval(80.0) * int_pi() * Interval(double(n - 1)) + dec("24.8"));
  Interval term2_printed = dec("0.000007963");
  Interval term2_recomputed =
      Interval(2.0) /
      (Interval(2.0) * int_pi() / geometry_constant_C(eps) + dec("28.78"));
  Interval rhs = min(term1, term2_recomputed);

  Certificate cert;
  cert.inputs = {{"n", std::to_string(n)},
                 {"q", q_list_str(q_list)},
                 {"epsilon", "0.86168"}};
  cert.conditions.push_back(cond_le("sum-inverse-q", lhs, rhs));
  // Trace rows: printed vs recomputed geometry term (0.1% agreement), the
  // admissibility chain against the arithmetic systole bound, and the
  // specialization constants 2 eps and 28.78 eps.
  Interval rel_gap = abs(term2_recomputed - term2_printed) / term2_printed;
  cert.conditions.push_back(cond_le("geometry-term-printed-vs-recomputed",
                                    rel_gap, dec("0.001")));
  cert.conditions.push_back(cond_le("epsilon-admissible-arithmetic", eps,
                                    dec("0.862554") / dec("1.001")));
  bool two_eps_exact =
      rational_from_string("0.86168") * 2 == rational_from_string("1.72336");
  cert.conditions.push_back(
      cond_echo("two-epsilon", Interval(2.0) * eps, dec("1.72336"), two_eps_exact));
  Interval coeff_gap = abs(dec("28.78") * eps - dec("24.8")) / dec("24.8");
  cert.conditions.push_back(
      cond_le("28.78-epsilon-vs-24.8", coeff_gap, dec("0.0005")));
  cert.verdict = settle(cert.conditions);
  return cert;
}

Certificate nonarithmetic_gate(const Interval& epsilon, const Interval& volume) {
  Certificate cert;
  cert.inputs = {{"epsilon", interval_to_string(epsilon)},
                 {"volume", interval_to_string(volume)}};
  Interval two_v0 = Interval(2.0) * regular_ideal_tet_volume();
  cert.conditions.push_back(cond_gt("volume-above-2v0", volume, two_v0));
  Interval d_N = orbifold_degree_bound(volume);
  cert.conditions.push_back(cond_gt("degree-bound-above-8", d_N, Interval(8.0)));
  cert.conditions.push_back(
      cond_lt("epsilon-over-degree-below-0.43125", epsilon / d_N, dec("0.43125")));
  // 3.45/8 = 0.43125 exactly, below the arithmetic shortest-geodesic bound.
  bool exact_const =
      rational_from_string("3.45") / 8 == rational_from_string("0.43125");
  cert.conditions.push_back(cond_echo("constant-3.45-over-8", dec("3.45") / Interval(8.0),
                                      dec("0.43125"), exact_const));
  cert.conditions.push_back(
      cond_lt("constant-below-arithmetic-geodesic-bound", dec("0.43125"),
              dec("0.43137")));
  cert.verdict = settle(cert.conditions);
  return cert;
}

Certificate certify_commensurability_hypotheses(
    long long twist_regions, long long min_crossings,
    std::optional<GeometricBasis<Rational>> cusp_basis) {
  if (twist_regions < 0 || min_crossings < 0)
    throw InvalidInput("counts must be nonnegative");

  Certificate cert;
  cert.inputs = {{"twist_regions", std::to_string(twist_regions)},
                 {"min_crossings", std::to_string(min_crossings)}};
  // (a) twist regions >= 9
  cert.conditions.push_back(cond_le("(a) twist-regions-at-least-9", Interval(9.0),
                                    Interval(double(twist_regions))));

  // (b) >= 6 crossings per region gives filling-slope length sqrt(c^2+1) > 6.
  Interval slope_len_sq = twist_region_slope_length_sq_lower_bound(min_crossings);
  Condition b = cond_gt("(b) filling-slope-length-sq-above-36", slope_len_sq,
                        Interval(36.0));
  b.satisfied = b.satisfied && min_crossings >= 6;
  cert.conditions.push_back(b);

  // (c) planar longitude >= 2 * twist regions > 16.
  long long longitude_lb = 0;
  if (twist_regions >= 1) {
    CuspTiling tiling = cusp_tiling_planar(twist_regions);
    longitude_lb = tiling.longitude_lower_bound();
  }
  cert.conditions.push_back(cond_gt("(c) planar-longitude-above-16",
                                    Interval(double(longitude_lb)),
                                    Interval(16.0)));

  // (d) every quotient slope length > 6, via the index-2 superlattice bound
  // on the cusp basis (meridian length 2, longitude length > 16).
  Condition d{"(d) quotient-slopes-above-6", "lhs > rhs", Interval(0.0),
              Interval(36.0), false, 0.0};
  try {
    GeometricBasis<Rational> basis =
        cusp_basis ? *cusp_basis
                   : geometric_basis_checked<Rational>(
                         {Rational(2), Rational(0)},
                         {Rational(0), Rational(2 * twist_regions)});
    auto report = check_quotient_bound(basis);
    Rational worst = report.entries[0].max_norm_sq;
    for (const auto& e : report.entries)
      if (e.max_norm_sq < worst) worst = e.max_norm_sq;
    d.lhs = Interval::from_rational(worst);
    d.satisfied = report.all_passed;
    d.margin = d.lhs.lo() - d.rhs.hi();
  } catch (const Error&) {
    d.satisfied = false;
  }
  cert.conditions.push_back(d);

  cert.verdict = settle(cert.conditions);
  return cert;
}

}  // namespace falcert
