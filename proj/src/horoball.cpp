#include "falcert/horoball.hpp"

#include <algorithm>
#include <sstream>

namespace falcert {

QSqrt3 QSqrt3::operator/(const QSqrt3& o) const {
  Rational norm = o.a * o.a - 3 * o.b * o.b;
  if (norm == 0) {
    if (o.a == 0 && o.b == 0) throw Error("division by zero in Q(sqrt3)");
    throw InternalError("Q(sqrt3) norm vanished on a nonzero element");
  }
  QSqrt3 conj{o.a, -o.b};
  QSqrt3 num = *this * conj;
  return {num.a / norm, num.b / norm};
}

int QSqrt3::sign() const {
  int sa = a == 0 ? 0 : (a > 0 ? 1 : -1);
  int sb = b == 0 ? 0 : (b > 0 ? 1 : -1);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Signs differ: compare a^2 against 3 b^2.
  Rational a2 = a * a, b23 = 3 * b * b;
  if (a2 == b23) return 0;
  return (a2 > b23) ? sa : sb;
}

Interval QSqrt3::to_interval() const {
  return Interval::from_rational(a) + Interval::from_rational(b) * int_sqrt3();
}

std::string QSqrt3::str() const {
  if (b == 0) return rational_to_string(a);
  std::string sq = rational_to_string(b) + "*sqrt3";
  if (a == 0) return sq;
  return rational_to_string(a) + (b > 0 ? "+" : "") + sq;
}

BigInt floor_q3(const QSqrt3& x) {
  BigInt k = floor_rational(x.a);  // start from the rational part
  if (x.b != 0) {
    double est = x.to_interval().mid();
    if (std::fabs(est) < 9e15) k = BigInt(static_cast<long long>(std::floor(est)));
  }
  while ((x - QSqrt3(Rational(k), 0)).sign() < 0) --k;
  while ((x - QSqrt3(Rational(k + 1), 0)).sign() >= 0) ++k;
  return k;
}

const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

namespace {

bool is_integer_q3(const QSqrt3& v) { return v.is_integer(); }

int mod2(const BigInt& n) {
  BigInt r = n % 2;
  if (r < 0) r += 2;
  return r.convert_to<int>();
}

}  // namespace

std::optional<Color> HoroballPattern::color_at(const QPoint& p) const {
  if (!is_integer_q3(p.y)) return std::nullopt;
  QSqrt3 Lx = longitude.x;
  BigInt m = floor_q3(p.x / Lx);
  QSqrt3 x0 = p.x - QSqrt3(Rational(m), 0) * Lx;
  auto it = std::find(lines.begin(), lines.end(), x0);
  if (it == lines.end()) return std::nullopt;
  std::size_t j = std::size_t(it - lines.begin());
  BigInt height = numerator(p.y.a);
  BigInt ly = numerator(longitude.y.a);
  BigInt k = height - m * ly;
  int off = mod2(k);
  Color base = parity[j];
  return off == 0 ? base : flip(base);
}

std::vector<HoroballPattern::ColoredCenter> HoroballPattern::fundamental_centers()
    const {
  std::vector<ColoredCenter> out;
  for (std::size_t j = 0; j < lines.size(); ++j) {
    out.push_back({{lines[j], QSqrt3(0)}, parity[j]});
    out.push_back({{lines[j], QSqrt3(1)}, flip(parity[j])});
  }
  return out;
}

bool HoroballPattern::translation_preserves(const QPoint& t) const {
  for (const ColoredCenter& c : fundamental_centers()) {
    auto col = color_at(c.pos + t);
    if (!col || *col != c.color) return false;
  }
  return true;
}

HoroballPattern generate_pattern(std::vector<QSqrt3> lines,
                                 std::vector<Color> parity, QPoint longitude) {
  if (lines.empty()) throw InvalidLines("pattern needs at least one line");
  if (!(lines[0] == QSqrt3(0)))
    throw InvalidLines("first line must sit at 0 (lift convention)");
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (!((lines[i] - lines[i - 1]).sign() > 0))
      throw InvalidLines("line positions must be strictly increasing");
  if (parity.size() != lines.size())
    throw InvalidLines("one parity entry per line required");
  if ((longitude.x - lines.back()).sign() <= 0)
    throw InvalidLines("longitude real part must exceed the last line");
  if (!longitude.y.is_integer())
    throw InvalidLines("longitude imaginary part must be an integer");
  // Adjacent full-sized balls may touch but not overlap: spacing >= 1 between
  // consecutive lines and from the last line to the first of the next period.
  auto gap_ok = [](const QSqrt3& g) { return (g - QSqrt3(1)).sign() >= 0; };
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (!gap_ok(lines[i] - lines[i - 1]))
      throw InvalidLines("lines closer than 1 would overlap full-sized balls");
  if (!gap_ok(longitude.x - lines.back()))
    throw InvalidLines("wrap-around line spacing below 1");
  return HoroballPattern{std::move(lines), std::move(parity), longitude};
}

namespace {

// Rotation of a vector (not about a center) by 2 pi / order.
QPoint rotate_vec(const QPoint& v, int order) {
  switch (order) {
    case 2:
      return {-v.x, -v.y};
    case 4:
      return {-v.y, v.x};
    case 3: {
      Rational h(1, 2);
      QSqrt3 half{h, 0};
      QSqrt3 s3_half{0, h};  // sqrt(3)/2
      return {QSqrt3(0) - half * v.x - s3_half * v.y,
              s3_half * v.x - half * v.y};
    }
    default:
      throw InvalidInput("rotation order must be 2, 3 or 4");
  }
}

}  // namespace

bool rotation_symmetry_test(const HoroballPattern& p, const RotationCandidate& c) {
  if (c.order != 2 && c.order != 3 && c.order != 4)
    throw InvalidInput("rotation order must be 2, 3 or 4");
  // R(s + g) = R(s) + rho(g) for g in the translation group, so R preserves
  // the colored set iff it maps fundamental representatives into it and the
  // rotated generators act as color-preserving translations.  A finite-order
  // rotation with R(S) contained in S forces R(S) = S.
  for (const auto& cc : p.fundamental_centers()) {
    QPoint d = cc.pos - c.center;
    QPoint image = c.center + rotate_vec(d, c.order);
    auto col = p.color_at(image);
    if (!col || *col != cc.color) return false;
  }
  if (!p.translation_preserves(rotate_vec(HoroballPattern::meridian(), c.order)))
    return false;
  if (!p.translation_preserves(rotate_vec(p.longitude, c.order))) return false;
  return true;
}

Order3Report order3_obstruction(const HoroballPattern& p) {
  Order3Report rep;

  rep.lines_on_sqrt3_lattice = true;
  for (const QSqrt3& l : p.lines) {
    // l = k * sqrt(3) with k a nonnegative integer.
    if (!(l.a == 0 && denominator(l.b) == 1)) {
      rep.lines_on_sqrt3_lattice = false;
      rep.offending_line = l.str();
      break;
    }
  }

  // Barycenter geometry: the triangle of mutually tangent unit-diameter
  // balls has height sqrt(3)/2; the offset x of the barycenter solves
  // x^2 = (1/2)^2 + (sqrt(3)/2 - x)^2, i.e. sqrt(3) x = 1.
  QSqrt3 x = QSqrt3(1) / QSqrt3{Rational(0), Rational(1)};
  rep.interstitial_center_offset = x;  // 1/sqrt(3) = sqrt(3)/3

  // Interstitial ball radius from (1/2 - r)^2 + x^2 = (1/2 + r)^2, i.e.
  // r = x^2 / 2.
  QSqrt3 r = x * x / QSqrt3(2);
  rep.interstitial_radius = r;

  QSqrt3 half{Rational(1, 2), 0};
  QSqrt3 lhs = (half - r) * (half - r) + x * x;
  QSqrt3 rhs = (half + r) * (half + r);
  rep.radius_equation_residual = lhs - rhs;

  // Gap: two radius-r balls hanging at distance x inside adjacent tangencies
  // cannot meet, since 2(r + x) < sqrt(3).
  QSqrt3 sqrt3{Rational(0), Rational(1)};
  QSqrt3 gap = sqrt3 - QSqrt3(2) * (r + x);
  rep.tangency_gap = gap;
  rep.gap_certified =
      gap.sign() > 0 && rep.radius_equation_residual == QSqrt3(0);
  rep.gap_value = gap.to_interval();

  if (!rep.lines_on_sqrt3_lattice) {
    rep.conclusion =
        "order-3 symmetry impossible: line " + rep.offending_line +
        " is not an integer multiple of sqrt(3)";
  } else if (rep.gap_certified) {
    rep.conclusion =
        "order-3 symmetry forces every unshaded face to have at least 6 "
        "vertices; no sphere triangulation has minimum degree 6 "
        "(sum of (6 - deg) equals 12)";
  } else {
    rep.conclusion = "gap certification failed";
  }
  return rep;
}

const char* order4_type_name(Order4Classification::Type t) {
  switch (t) {
    case Order4Classification::Type::Even: return "even";
    case Order4Classification::Type::Odd: return "odd";
    case Order4Classification::Type::None: return "none";
  }
  throw InternalError("unknown order-4 type");
}

Order4Classification classify_order4(const HoroballPattern& p) {
  Order4Classification out;

  // Integer column structure is a prerequisite for both patterns.
  for (const QSqrt3& l : p.lines)
    if (!l.is_integer()) return out;
  if (!p.longitude.x.is_integer()) return out;
  BigInt Lx = numerator(p.longitude.x.a);
  BigInt Ly = numerator(p.longitude.y.a);

  auto line_is = [&](std::size_t j, long long v) {
    return p.lines[j] == QSqrt3(v);
  };

  // Columns at every integer: lines = 0, 1, ..., Lx-1.
  bool consecutive = BigInt(p.lines.size()) == Lx;
  if (consecutive)
    for (std::size_t j = 0; j < p.lines.size(); ++j)
      consecutive = consecutive && line_is(j, (long long)j);

  // Columns at even integers only: lines = 0, 2, ..., Lx-2.
  bool even_columns = 2 * BigInt(p.lines.size()) == Lx;
  if (even_columns)
    for (std::size_t j = 0; j < p.lines.size(); ++j)
      even_columns = even_columns && line_is(j, 2 * (long long)j);

  if (consecutive) {
    // Checkerboard colors: parity_j alternates with j and the longitude
    // respects the coloring (Lx + Ly even).
    Color base = p.parity[0];  // color at x + y even
    bool checker = mod2(Lx + Ly) == 0;
    for (std::size_t j = 0; j < p.lines.size(); ++j) {
      Color expect = (j % 2 == 0) ? base : flip(base);
      if (p.parity[j] != expect) checker = false;
    }
    if (!checker) return out;  // integer columns but not a checkerboard

    out.type = Order4Classification::Type::Even;
    // Exhaustive verification on the side-2 fundamental square: full-sized
    // centers are exactly the integer points there (heights are integral by
    // construction and all columns are integers), with checkerboard colors,
    // and the square's translates tile the pattern.
    out.square_verified = true;
    for (int a = 0; a < 2 && out.square_verified; ++a)
      for (int b = 0; b < 2; ++b) {
        QPoint pt{QSqrt3(a), QSqrt3(b)};
        auto c = p.color_at(pt);
        Color expect = (a + b) % 2 == 0 ? base : flip(base);
        if (!c || *c != expect) {
          out.square_verified = false;
          break;
        }
      }
    if (!p.translation_preserves({QSqrt3(2), QSqrt3(0)}) ||
        !p.translation_preserves({QSqrt3(0), QSqrt3(2)}))
      out.square_verified = false;
    if (!out.square_verified) {
      out.type = Order4Classification::Type::None;
      return out;
    }

    // Every blue center of the square must be an order-4 fixed point.
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        QPoint pt{QSqrt3(a), QSqrt3(b)};
        auto c = p.color_at(pt);
        if (c && *c == Color::Blue && rotation_symmetry_test(p, {4, pt}))
          out.blue_fixed_points.push_back(pt);
      }
  } else if (even_columns) {
    out.type = Order4Classification::Type::Odd;
  }
  return out;
}

std::string svg_fundamental_domain(const HoroballPattern& p) {
  std::ostringstream svg;
  double Lx = p.longitude.x.to_interval().mid();
  double scale = 60.0;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='"
      << int((Lx + 1) * scale) << "' height='" << int(3 * scale) << "'>\n";
  for (const auto& cc : p.fundamental_centers()) {
    double x = cc.pos.x.to_interval().mid();
    double y = cc.pos.y.to_interval().mid();
    svg << "  <circle cx='" << (x + 0.5) * scale << "' cy='"
        << (2.5 - y) * scale << "' r='" << 0.5 * scale << "' fill='"
        << (cc.color == Color::Red ? "#c03030" : "#3050c0") << "'/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

HoroballPattern pattern_zi_checkerboard() {
  return generate_pattern({QSqrt3(0), QSqrt3(1)}, {Color::Red, Color::Blue},
                          {QSqrt3(2), QSqrt3(0)});
}

HoroballPattern pattern_sqrt3_lines() {
  QSqrt3 s3{Rational(0), Rational(1)};
  QSqrt3 two_s3{Rational(0), Rational(2)};
  return generate_pattern({QSqrt3(0), s3}, {Color::Red, Color::Blue},
                          {two_s3, QSqrt3(0)});
}

HoroballPattern pattern_even_columns() {
  return generate_pattern({QSqrt3(0)}, {Color::Red}, {QSqrt3(2), QSqrt3(0)});
}

}  // namespace falcert
