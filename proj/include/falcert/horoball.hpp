#ifndef FALCERT_HOROBALL_HPP
#define FALCERT_HOROBALL_HPP

#include <optional>
#include <string>
#include <vector>

#include "falcert/errors.hpp"
#include "falcert/interval.hpp"
#include "falcert/scalar.hpp"

namespace falcert {

// Element of Q(sqrt(3)): a + b*sqrt(3), exact.
struct QSqrt3 {
  Rational a, b;

  QSqrt3() = default;
  QSqrt3(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
  explicit QSqrt3(long long n) : a(n), b(0) {}

  QSqrt3 operator+(const QSqrt3& o) const { return {a + o.a, b + o.b}; }
  QSqrt3 operator-(const QSqrt3& o) const { return {a - o.a, b - o.b}; }
  QSqrt3 operator-() const { return {-a, -b}; }
  QSqrt3 operator*(const QSqrt3& o) const {
    return {a * o.a + 3 * b * o.b, a * o.b + b * o.a};
  }
  QSqrt3 operator/(const QSqrt3& o) const;

  bool operator==(const QSqrt3& o) const { return a == o.a && b == o.b; }

  int sign() const;  // exact sign of a + b*sqrt(3)
  bool operator<(const QSqrt3& o) const { return (*this - o).sign() < 0; }
  bool is_rational() const { return b == 0; }
  bool is_integer() const { return b == 0 && denominator(a) == 1; }

  Interval to_interval() const;
  std::string str() const;
};

BigInt floor_q3(const QSqrt3& x);

struct QPoint {
  QSqrt3 x, y;
  QPoint operator+(const QPoint& o) const { return {x + o.x, y + o.y}; }
  QPoint operator-(const QPoint& o) const { return {x - o.x, y - o.y}; }
  bool operator==(const QPoint& o) const { return x == o.x && y == o.y; }
};

enum class Color { Red = 0, Blue = 1 };
inline Color flip(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
const char* color_name(Color c);

// Full-sized-horoball pattern on the planar cusp at infinity: vertical lines
// of diameter-1 balls at Re(z) = l_j, colors alternating in height, closed
// under the translation group generated by the meridian 2i and the
// longitude.  Finite data: lines within one longitude period plus per-line
// color offsets.
struct HoroballPattern {
  std::vector<QSqrt3> lines;  // strictly increasing, lines[0] = 0
  std::vector<Color> parity;  // color of the center l_j + 0*i
  QPoint longitude;           // (Lx, Ly); Lx > last line, Ly an integer

  static QPoint meridian() { return {QSqrt3(0), QSqrt3(2)}; }

  struct ColoredCenter {
    QPoint pos;
    Color color;
  };

  bool is_center(const QPoint& p) const { return color_at(p).has_value(); }
  std::optional<Color> color_at(const QPoint& p) const;

  // One representative pair of centers per line (heights 0 and 1).
  std::vector<ColoredCenter> fundamental_centers() const;

  // True iff translating every colored center by t lands on a center of the
  // same color.
  bool translation_preserves(const QPoint& t) const;
};

HoroballPattern generate_pattern(std::vector<QSqrt3> lines,
                                 std::vector<Color> parity, QPoint longitude);

struct RotationCandidate {
  int order = 2;  // 2, 3 or 4
  QPoint center;
};

// True iff rotating every center by e^{2 pi i/order} about the candidate
// center maps the colored center set onto itself.  Exact arithmetic over
// Q(sqrt(3)); rotations of orders 2 and 4 stay rational.
bool rotation_symmetry_test(const HoroballPattern& p, const RotationCandidate& c);

struct Order3Report {
  bool lines_on_sqrt3_lattice = false;  // every l_j = k_j sqrt(3), k_j integer
  std::string offending_line;           // witness when the above fails
  QSqrt3 interstitial_center_offset;    // x = 1/sqrt(3), from the barycenter
  QSqrt3 interstitial_radius;           // r = 1/6
  QSqrt3 radius_equation_residual;      // exact residual, must be 0
  QSqrt3 tangency_gap;                  // sqrt(3) - 2(1/6 + 1/sqrt(3)), > 0
  bool gap_certified = false;           // exact strict positivity
  Interval gap_value;                   // numeric enclosure of the gap
  std::string conclusion;
};

// Order-3 obstruction arithmetic: the sqrt(3)-lattice constraint on lines,
// the interstitial radius r = 1/6 from the barycenter geometry, and the
// strict tangency gap 2(1/6 + 1/sqrt(3)) < sqrt(3).  With the gap certified,
// every unshaded face has at least 6 vertices, which no sphere triangulation
// allows (sum of (6 - deg) over vertices is 12).
Order3Report order3_obstruction(const HoroballPattern& p);

struct Order4Classification {
  enum class Type { Even, Odd, None };
  Type type = Type::None;
  // For Even: centers are exactly Z[i] with checkerboard colors; the side-2
  // fundamental square was verified exhaustively and every blue center in it
  // is a verified order-4 fixed point.
  bool square_verified = false;
  std::vector<QPoint> blue_fixed_points;
};

const char* order4_type_name(Order4Classification::Type t);

Order4Classification classify_order4(const HoroballPattern& p);

// Debug aid, not a contract: circles of the fundamental domain as plain SVG.
std::string svg_fundamental_domain(const HoroballPattern& p);

// Reference patterns.
HoroballPattern pattern_zi_checkerboard();  // Z[i] centers, checkerboard colors
HoroballPattern pattern_sqrt3_lines();      // lines at 0 and sqrt(3), alternating
HoroballPattern pattern_even_columns();     // full columns at even integers only

}  // namespace falcert

#endif
