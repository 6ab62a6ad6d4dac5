#include "falcert/lattice.hpp"

namespace falcert {

namespace {

struct Candidate {
  int case_id;
  const char* label;
  Vec2<Rational> u, v;
};

bool matches(const Candidate& c, const GeometricBasis<Rational>& reduced,
             const Rational& covolume) {
  Rational cu = norm_sq(c.u), cv = norm_sq(c.v);
  Rational ra = norm_sq(reduced.a), rb = norm_sq(reduced.b);
  bool norms_match = (cu == ra && cv == rb) || (cu == rb && cv == ra);
  if (!norms_match) return false;
  Rational d = det(c.u, c.v);
  return (d < 0 ? Rational(-d) : d) == covolume;
}

}  // namespace

std::array<QuotientForm, 3> classify_quotient_basis(const GeometricBasis<Rational>& g1) {
  const Vec2<Rational>& a = g1.a;
  const Vec2<Rational>& b = g1.b;
  TranslationLattice<Rational> lat{a, b};
  auto subs = index_two_sublattices(lat);
  // Constructor order: <2a,b> is case (2), <a,2b> case (1), <a+b,2a> case (3).
  const int case_of[3] = {2, 1, 3};

  Vec2<Rational> a2 = a + a, b2 = b + b;
  std::vector<Candidate> cands[3];
  cands[1] = {{1, "{a,2b}", a, b2},
              {1, "{a,a+2b}", a, a + b2},
              {1, "{a,a-2b}", a, a - b2}};
  cands[0] = {{2, "{b,2a}", b, a2},
              {2, "{b,b+2a}", b, b + a2},
              {2, "{b,b-2a}", b, b - a2}};
  // Case (3) candidates, plus the 2b forms from the proof of the quotient
  // length bound (needed when the roles of a and b exchange).
  cands[2] = {{3, "{a+b,a-b}", a + b, a - b},
              {3, "{a+b,2a}", a + b, a2},
              {3, "{a-b,2a}", a - b, a2},
              {3, "{a+b,2b}", a + b, b2},
              {3, "{a-b,2b}", a - b, b2}};

  std::array<QuotientForm, 3> out;
  for (int i = 0; i < 3; ++i) {
    GeometricBasis<Rational> gb = reduce_basis(subs[i]);
    Rational cov = subs[i].covolume_signed();
    if (cov < 0) cov = -cov;
    const Candidate* hit = nullptr;
    for (const Candidate& c : cands[i]) {
      if (matches(c, gb, cov)) {
        hit = &c;
        break;
      }
    }
    if (!hit)
      throw NoMatchingForm(
          "index-2 sublattice basis matches no listed form (case " +
          std::to_string(case_of[i]) + ")");
    out[i] = QuotientForm{hit->case_id, hit->label, gb, subs[i]};
  }
  return out;
}

}  // namespace falcert
