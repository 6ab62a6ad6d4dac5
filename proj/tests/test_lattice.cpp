#include <doctest.h>

#include <random>

#include "falcert/lattice.hpp"
#include "test_support.hpp"

using namespace falcert;
using testsupport::random_geometric_basis;
using testsupport::random_int_lattice;
using testsupport::to_rational;

namespace {

TranslationLattice<Rational> rat_lat(long long ux, long long uy, long long vx,
                                     long long vy) {
  return {{Rational(ux), Rational(uy)}, {Rational(vx), Rational(vy)}};
}

}  // namespace

TEST_CASE("reduce_basis on already reduced and skewed bases") {
  auto g = reduce_basis(rat_lat(1, 0, 0, 1));
  CHECK(g.a.x == 1);
  CHECK(g.a.y == 0);
  CHECK(g.b.x == 0);
  CHECK(g.b.y == 1);

  auto g2 = reduce_basis(rat_lat(1, 0, 100, 1));
  CHECK(norm_sq(g2.a) == 1);
  CHECK(norm_sq(g2.b) == 1);
  CHECK(g2.a.x == 1);
  CHECK(g2.b.y == 1);

  // Tie |v| = |v-u| resolved toward <a,b> >= 0.
  auto g3 = reduce_basis(rat_lat(2, 0, 1, 2));
  CHECK(g3.a.x == 2);
  CHECK(g3.a.y == 0);
  CHECK(g3.b.x == 1);
  CHECK(g3.b.y == 2);
  CHECK(dot(g3.a, g3.b) >= 0);
}

TEST_CASE("reduce_basis rejects degenerate input") {
  CHECK_THROWS_AS(reduce_basis(rat_lat(1, 2, 2, 4)), DegenerateLattice);
}

TEST_CASE("brute force oracle on fixed cases") {
  auto g = brute_force_shortest(rat_lat(1, 0, 0, 1), 10);
  CHECK(norm_sq(g.a) == 1);
  CHECK(norm_sq(g.b) == 1);
  auto g2 = brute_force_shortest(rat_lat(1, 0, 100, 1), 200);
  CHECK(norm_sq(g2.a) == 1);
  CHECK(norm_sq(g2.b) == 1);
  auto g3 = brute_force_shortest(rat_lat(3, 0, 1, 5), 50);
  CHECK(norm_sq(g3.a) == 9);
  CHECK(norm_sq(g3.b) == 26);
}

TEST_CASE("reduce_basis matches the exhaustive oracle") {
  std::mt19937 rng(7011);
  for (int i = 0; i < 200; ++i) {
    auto ilat = random_int_lattice(rng, 50);
    auto reduced = reduce_basis(to_rational(ilat));
    auto oracle = brute_force_shortest(ilat, 4);
    CHECK(norm_sq(reduced.a) == Rational(norm_sq(oracle.a)));
    CHECK(norm_sq(reduced.b) == Rational(norm_sq(oracle.b)));
  }
}

TEST_CASE("reduce_basis is idempotent and covolume preserving") {
  std::mt19937 rng(7012);
  for (int i = 0; i < 500; ++i) {
    auto lat = to_rational(random_int_lattice(rng, 50));
    auto g = reduce_basis(lat);
    Rational cov = g.covolume_signed();
    if (cov < 0) cov = -cov;
    Rational orig = lat.covolume_signed();
    if (orig < 0) orig = -orig;
    CHECK(cov == orig);
    auto g2 = reduce_basis(TranslationLattice<Rational>{g.a, g.b});
    CHECK(norm_sq(g2.a) == norm_sq(g.a));
    CHECK(norm_sq(g2.b) == norm_sq(g.b));
  }
}

TEST_CASE("index-2 sublattices: construction, covolume, membership") {
  auto lat = rat_lat(1, 0, 0, 1);
  auto subs = index_two_sublattices(lat);
  for (const auto& s : subs) {
    Rational cov = s.covolume_signed();
    if (cov < 0) cov = -cov;
    CHECK(cov == 2);
    CHECK(contains(lat, s.u));
    CHECK(contains(lat, s.v));
  }
  // <2u, v> = <(2,0),(0,1)> does not contain (1,0).
  CHECK(!contains(subs[0], Vec2<Rational>{Rational(1), Rational(0)}));
}

TEST_CASE("index-2 superlattices invert the sublattice relation") {
  auto lat = rat_lat(2, 0, 0, 1);
  auto supers = index_two_superlattices(lat);
  for (const auto& s : supers) {
    Rational cov = s.covolume_signed();
    if (cov < 0) cov = -cov;
    CHECK(cov == 1);  // halved
    CHECK(contains(s, lat.u));
    CHECK(contains(s, lat.v));
  }
  // The first superlattice is the full integer lattice again.
  CHECK(contains(supers[0], Vec2<Rational>{Rational(1), Rational(0)}));
  CHECK(contains(supers[0], Vec2<Rational>{Rational(0), Rational(1)}));

  // Composing sub then super recovers a lattice containing the original;
  // covolumes double and halve exactly along the way.
  std::mt19937 rng(7013);
  for (int i = 0; i < 100; ++i) {
    auto base = to_rational(random_int_lattice(rng, 20));
    Rational base_cov = base.covolume_signed();
    if (base_cov < 0) base_cov = -base_cov;
    for (const auto& sub : index_two_sublattices(base)) {
      Rational sub_cov = sub.covolume_signed();
      if (sub_cov < 0) sub_cov = -sub_cov;
      CHECK(sub_cov == 2 * base_cov);
      bool some_super_contains_base = false;
      for (const auto& sup : index_two_superlattices(sub)) {
        Rational sup_cov = sup.covolume_signed();
        if (sup_cov < 0) sup_cov = -sup_cov;
        CHECK(2 * sup_cov == sub_cov);
        if (contains(sup, base.u) && contains(sup, base.v))
          some_super_contains_base = true;
      }
      CHECK(some_super_contains_base);
    }
  }
}

TEST_CASE("quotient basis classification on fixed cases") {
  auto g1 = geometric_basis_checked<Rational>({Rational(1), Rational(0)},
                                              {Rational(0), Rational(1)});
  auto forms = classify_quotient_basis(g1);
  // Constructor order: case 2, case 1, case 3.
  CHECK(forms[0].case_id == 2);
  CHECK(forms[1].case_id == 1);
  CHECK(forms[2].case_id == 3);
  CHECK(forms[1].label == std::string("{a,2b}"));
  CHECK(norm_sq(forms[1].basis.a) == 1);
  CHECK(norm_sq(forms[1].basis.b) == 4);

  auto g2 = geometric_basis_checked<Rational>({Rational(2), Rational(0)},
                                              {Rational(0), Rational(17)});
  auto forms2 = classify_quotient_basis(g2);
  CHECK(forms2[2].case_id == 3);
  CHECK(forms2[2].label.find("a+b") != std::string::npos);
}

TEST_CASE("quotient basis classification never misses on random bases") {
  std::mt19937 rng(7014);
  for (int i = 0; i < 300; ++i) {
    auto g = random_geometric_basis(rng, 30);
    CHECK_NOTHROW(classify_quotient_basis(g));
  }
}

TEST_CASE("quotient bound on fixed geometric bases") {
  auto g = geometric_basis_checked<Rational>({Rational(2), Rational(0)},
                                             {Rational(0), Rational(17)});
  auto rep = check_quotient_bound(g);
  CHECK(rep.all_passed);
  for (const auto& e : rep.entries) CHECK(e.max_norm_sq > 36);

  auto g2 = geometric_basis_checked<Rational>(
      {Rational(2), Rational(0)}, {Rational(1), rational_from_string("16.5")});
  CHECK(check_quotient_bound(g2).all_passed);

  auto g3 = geometric_basis_checked<Rational>({Rational(2), Rational(0)},
                                              {Rational(0), Rational(16)});
  CHECK_THROWS_AS(check_quotient_bound(g3), HypothesisViolated);
}

TEST_CASE("geometric_basis_checked rejects non-minimal pairs") {
  CHECK_THROWS_AS(geometric_basis_checked<Rational>(
                      {Rational(2), Rational(0)}, {Rational(16), Rational(1)}),
                  InvalidInput);
}

TEST_CASE("interval-scalar reduction agrees with exact reduction") {
  std::mt19937 rng(7015);
  for (int i = 0; i < 100; ++i) {
    auto ilat = random_int_lattice(rng, 12);
    auto exact = reduce_basis(to_rational(ilat));
    TranslationLattice<Interval> ival{
        {Interval(double(ilat.u.x)), Interval(double(ilat.u.y))},
        {Interval(double(ilat.v.x)), Interval(double(ilat.v.y))}};
    auto gi = reduce_basis(ival);
    CHECK(norm_sq(gi.a).contains(norm_sq(exact.a).convert_to<double>()));
    CHECK(norm_sq(gi.b).contains(norm_sq(exact.b).convert_to<double>()));
  }
}

TEST_CASE("wide enclosures refuse to certify a basis") {
  // Overlapping norms cannot be ordered; the reduction must signal the
  // ambiguity rather than guess.
  TranslationLattice<Interval> wide{{Interval(0.9, 1.1), Interval(0.0)},
                                    {Interval(0.0), Interval(1.0)}};
  CHECK_THROWS_AS(reduce_basis(wide), AmbiguousComparison);
}

TEST_CASE("interval-scalar quotient bound on an irrational shape") {
  // |b2| = 17 at 89 degrees from a2 = (2,0).
  Interval angle = int_pi() * Interval(89.0) / Interval(180.0);
  Interval bx = Interval(17.0) * cos(angle);
  Interval by = Interval(17.0) * sin(angle);
  auto g = geometric_basis_checked<Interval>({Interval(2.0), Interval(0.0)},
                                             {bx, by});
  auto rep = check_quotient_bound(g);
  CHECK(rep.all_passed);
}
