// Acceptance gate: one line per criterion, exit code = number of failures.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "falcert/certifier.hpp"
#include "falcert/horoball.hpp"
#include "falcert/json_io.hpp"
#include "falcert/lattice.hpp"
#include "falcert/nerve.hpp"
#include "nerve_corpus.hpp"
#include "test_support.hpp"

using namespace falcert;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
  int id;
  double budget_s;
  Clock::time_point start = Clock::now();
  Criterion(int id_, double budget) : id(id_), budget_s(budget) {}
  void report(bool ok, const std::string& detail) {
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_budget = s < budget_s;
    if (!ok || !in_budget) ++failures;
    std::printf("criterion %02d [%s] %6.2fs (budget %gs)  %s\n", id,
                ok && in_budget ? "PASS" : "FAIL", s, budget_s, detail.c_str());
  }
};

FalGeometry l4_geometry() {
  FalGeometry fal;
  fal.volume = dec("21.9831742603");
  fal.systole_lower_bound = dec("0.962424");
  fal.n = 4;
  fal.arithmetic = true;
  return fal;
}

void criterion_1() {
  Criterion c(1, 1.0);
  FalGeometry fal = l4_geometry();
  Interval eps = default_epsilon(fal);
  auto thr = quantify_threshold(eps, fal.volume);
  bool window = certainly_le(dec("0.000005695"), thr.value) &&
                certainly_le(thr.value, dec("0.00000581"));
  long long q = min_uniform_q(fal, std::nullopt, BoundMode::L4);
  c.report(window && q == 1023,
           "threshold " + interval_to_string(thr.value) + ", min-q " +
               std::to_string(q) + " (want 1023)");
}

void criterion_2() {
  Criterion c(2, 0.1);
  Interval recomputed =
      Interval(2.0) /
      (Interval(2.0) * int_pi() / geometry_constant_C(dec("0.86168")) +
       dec("28.78"));
  Interval rel = abs(recomputed - dec("0.000007963")) / dec("0.000007963");
  bool term_ok = certainly_lt(rel, dec("0.001"));
  bool two_eps_ok =
      rational_from_string("0.86168") * 2 == rational_from_string("1.72336");
  Interval coeff = dec("28.78") * dec("0.86168");
  Interval coeff_rel = abs(coeff - dec("24.80")) / dec("24.80");
  bool coeff_ok = certainly_lt(coeff_rel, dec("0.0005"));
  c.report(term_ok && two_eps_ok && coeff_ok,
           "recomputed " + interval_to_string(recomputed) +
               " vs 7.963e-6; 28.78*eps " + interval_to_string(coeff));
}

void criterion_3() {
  Criterion c(3, 0.1);
  Interval guard = Interval(1.0) /
                   (Interval(2.0) * int_pi() / geometry_constant_C(int_log3()) +
                    dec("28.78"));
  c.report(certainly_le(guard, dec("0.0000086")),
           interval_to_string(guard) + " <= 0.0000086");
}

void criterion_4() {
  Criterion c(4, 5.0);
  std::mt19937 rng(424242);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    auto ilat = testsupport::random_int_lattice(rng, 50);
    auto reduced = reduce_basis(testsupport::to_rational(ilat));
    auto oracle = brute_force_shortest(ilat, 4);
    if (norm_sq(reduced.a) != Rational(norm_sq(oracle.a)) ||
        norm_sq(reduced.b) != Rational(norm_sq(oracle.b)))
      ++bad;
  }
  c.report(bad == 0, "1000 random lattices, " + std::to_string(bad) + " mismatches");
}

void criterion_5() {
  Criterion c(5, 10.0);
  std::mt19937 rng(52525);
  int misses = 0;
  for (int i = 0; i < 1000; ++i) {
    auto g = testsupport::random_geometric_basis(rng, 50);
    try {
      classify_quotient_basis(g);
    } catch (const NoMatchingForm&) {
      ++misses;
    }
  }
  c.report(misses == 0, "1000 random bases, " + std::to_string(misses) +
                            " NoMatchingForm");
}

void criterion_6() {
  Criterion c(6, 30.0);
  int feasible = 0, infeasible = 0, ambiguous = 0, violations = 0;
  std::vector<Rational> lengths{rational_from_string("16.01")};
  for (Rational y = rational_from_string("16.5"); y <= 40;
       y += rational_from_string("0.5"))
    lengths.push_back(y);

  for (const Rational& blen : lengths) {
    Interval bl = Interval::from_rational(blen);
    for (int deg = 1; deg <= 90; ++deg) {
      // At the right angle cos/sin are exact; point intervals let the exact
      // Lagrange tie certify.
      Interval ct, st;
      if (deg == 90) {
        ct = Interval(0.0);
        st = Interval(1.0);
      } else {
        Interval theta = int_pi() * Interval(double(deg)) / Interval(180.0);
        ct = cos(theta);
        st = sin(theta);
      }
      Vec2<Interval> a2{Interval(2.0), Interval(0.0)};
      Vec2<Interval> b2{bl * ct, bl * st};
      try {
        auto g = geometric_basis_checked<Interval>(a2, b2);
        check_quotient_bound(g);
        ++feasible;
      } catch (const InvalidInput&) {
        // Certify that the pair genuinely fails the geometric-basis
        // hypothesis (|<a,b>| > |a|^2/2), not merely ambiguously.
        Interval two_abs = abs(dot(a2, b2)) * Interval(2.0);
        if (certainly_lt(Interval(4.0), two_abs))
          ++infeasible;
        else
          ++ambiguous;
      } catch (const BoundViolated&) {
        ++violations;
      } catch (const AmbiguousComparison&) {
        ++ambiguous;
      } catch (const HypothesisViolated&) {
        ++ambiguous;
      }
    }
  }

  // Exact-arithmetic strip covering the same |b2| range: every geometric
  // basis with |a2| = 2 and x-offset in [-1, 1] half-steps.
  int exact_cells = 0, exact_failures = 0;
  for (const Rational& y : lengths) {
    for (int xi = -2; xi <= 2; ++xi) {
      Rational x(xi, 2);
      auto g = geometric_basis_checked<Rational>(
          {Rational(2), Rational(0)}, {x, y});
      ++exact_cells;
      try {
        check_quotient_bound(g);
      } catch (const Error&) {
        ++exact_failures;
      }
    }
  }

  c.report(violations == 0 && ambiguous == 0 && feasible > 0 && exact_failures == 0,
           "angle grid: " + std::to_string(feasible) + " hypothesis-feasible, " +
               std::to_string(infeasible) + " infeasible (certified), " +
               std::to_string(ambiguous) + " ambiguous, " +
               std::to_string(violations) + " bound violations; exact strip " +
               std::to_string(exact_cells) + " cells, " +
               std::to_string(exact_failures) + " failures");
}

void criterion_7() {
  Criterion c(7, 0.1);
  Order3Report rep = order3_obstruction(pattern_sqrt3_lines());
  bool exact_radius = rep.interstitial_radius == QSqrt3(Rational(1, 6), Rational(0));
  bool zero_residual = rep.radius_equation_residual == QSqrt3(0);
  QSqrt3 margin_floor{Rational(6, 25), Rational(0)};  // 0.24
  bool margin_ok = (rep.tangency_gap - margin_floor).sign() > 0;
  c.report(exact_radius && zero_residual && rep.gap_certified && margin_ok,
           "r = " + rep.interstitial_radius.str() + ", residual " +
               rep.radius_equation_residual.str() + ", gap " +
               interval_to_string(rep.gap_value));
}

void criterion_8() {
  Criterion c(8, 0.5);
  auto cls = classify_order4(pattern_zi_checkerboard());
  bool even = cls.type == Order4Classification::Type::Even;
  bool fixed_pts = cls.blue_fixed_points.size() == 2;
  c.report(even && cls.square_verified && fixed_pts,
           std::string("type ") + order4_type_name(cls.type) + ", square " +
               (cls.square_verified ? "verified" : "UNVERIFIED") + ", " +
               std::to_string(cls.blue_fixed_points.size()) +
               " blue order-4 fixed points");
}

void criterion_9() {
  Criterion c(9, 10.0);
  bool ok = true;
  std::string detail;

  NerveGraph oct = testsupport::octahedral_nerve();
  ok = ok && validate_nerve(oct).valid;
  for (auto red : oct.red_edges)
    ok = ok && generalized_crossing_disk_cycles(oct, red).empty();

  NerveGraph gadget = testsupport::doubled_crossing_disk_nerve();
  ok = ok && validate_nerve(gadget).valid;
  ok = ok && !generalized_crossing_disk_cycles(gadget, {0, 1}).empty();
  try {
    ok = ok && unique_crossing_disk_circle(gadget) == std::make_pair(2, 4);
  } catch (const NoneFound&) {
    ok = false;
  }

  std::mt19937 rng(99999);
  int euler_bad = 0, degree_bad = 0;
  for (int i = 0; i < 200; ++i) {
    NerveGraph g = testsupport::random_sphere_triangulation(rng, 10 + (i % 48) * 4);
    std::set<int> vs;
    for (const auto& f : g.faces) vs.insert(f.begin(), f.end());
    long long sum = 0;
    for (int v : vs) sum += 6 - g.degree(v);
    if (sum != 12) ++euler_bad;
    if (g.degree(low_degree_vertex(g)) > 5) ++degree_bad;
  }
  ok = ok && euler_bad == 0 && degree_bad == 0;
  c.report(ok, "octahedral + crossing-disk gadget + 200 triangulations (" +
                   std::to_string(euler_bad) + " Euler-count failures)");
}

void criterion_10() {
  Criterion c(10, 1.0);
  Certificate pass = certify_commensurability_hypotheses(9, 6);
  Certificate fa = certify_commensurability_hypotheses(8, 6);
  Certificate fb = certify_commensurability_hypotheses(9, 5);
  bool ok = pass.verdict == Verdict::Pass && fa.verdict == Verdict::Fail &&
            fb.verdict == Verdict::Fail &&
            fa.first_violated()->name.find("(a)") == 0 &&
            fb.first_violated()->name.find("(b)") == 0;
  c.report(ok, "(9,6) pass; (8,6) fails clause (a); (9,5) fails clause (b)");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf(
      "criterion 11 [NOTE]                       topological statements are "
      "certified through criteria 1-10 (every inequality their proofs "
      "consume); they are not directly computable\n");
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
