#include "falcert/json_io.hpp"

#include <sstream>

namespace falcert {

namespace {

// "pi", "pi/2", "3*pi/4", "0.5*pi" -> multiple of pi; otherwise empty.
std::optional<Interval> parse_pi_multiple(const std::string& s) {
  auto pos = s.find("pi");
  if (pos == std::string::npos) return std::nullopt;
  Rational scale(1);
  std::string before = s.substr(0, pos);
  std::string after = s.substr(pos + 2);
  if (!before.empty()) {
    if (before.back() != '*') throw InvalidInput("cannot parse angle '" + s + "'");
    before.pop_back();
    if (!before.empty()) scale *= rational_from_string(before);
  }
  if (!after.empty()) {
    if (after.front() != '/') throw InvalidInput("cannot parse angle '" + s + "'");
    Rational d = rational_from_string(after.substr(1));
    if (d == 0) throw InvalidInput("zero denominator in angle '" + s + "'");
    scale /= d;
  }
  return Interval::from_rational(scale) * int_pi();
}

const json& require(const json& v, const char* key) {
  if (!v.is_object() || !v.contains(key))
    throw InvalidInput(std::string("missing field '") + key + "'");
  return v.at(key);
}

}  // namespace

Rational rational_from_json(const json& v) {
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float())
    throw InvalidInput(
        "non-integer JSON numbers are lossy; write them as strings");
  throw InvalidInput("expected a number or numeric string");
}

Interval interval_from_json(const json& v) {
  if (v.is_string()) {
    if (auto p = parse_pi_multiple(v.get<std::string>())) return *p;
  }
  return Interval::from_rational(rational_from_json(v));
}

namespace {

Vec2<Rational> vec2_from_json(const json& v) {
  if (!v.is_array() || v.size() != 2)
    throw InvalidInput("vector must be a 2-element array");
  return {rational_from_json(v[0]), rational_from_json(v[1])};
}

json vec2_to_json(const Vec2<Rational>& v) {
  return json::array({rational_to_string(v.x), rational_to_string(v.y)});
}

}  // namespace

TranslationLattice<Rational> lattice_from_json(const json& v) {
  TranslationLattice<Rational> lat{vec2_from_json(require(v, "u")),
                                   vec2_from_json(require(v, "v"))};
  if (lat.covolume_signed() == 0) throw DegenerateLattice();
  return lat;
}

json lattice_to_json(const TranslationLattice<Rational>& lat) {
  return json{{"u", vec2_to_json(lat.u)}, {"v", vec2_to_json(lat.v)}};
}

json basis_to_json(const GeometricBasis<Rational>& gb) {
  Rational cov = gb.covolume_signed();
  if (cov < 0) cov = -cov;
  return json{{"a", vec2_to_json(gb.a)},
              {"b", vec2_to_json(gb.b)},
              {"a_norm_sq", rational_to_string(norm_sq(gb.a))},
              {"b_norm_sq", rational_to_string(norm_sq(gb.b))},
              {"covolume", rational_to_string(cov)}};
}

CuspShape cusp_shape_from_json(const json& v) {
  return make_cusp_shape(interval_from_json(require(v, "r")),
                         interval_from_json(require(v, "theta")),
                         interval_from_json(require(v, "lambda")));
}

MultiSlope multi_slope_from_json(const json& v) {
  std::vector<std::pair<int, Slope>> fillings;
  for (const json& f : require(v, "fillings")) {
    fillings.emplace_back(
        require(f, "cusp").get<int>(),
        make_slope(require(f, "p").get<long long>(), require(f, "q").get<long long>()));
  }
  return make_multi_slope(require(v, "unfilled").get<int>(), std::move(fillings));
}

FalGeometry fal_geometry_from_json(const json& v) {
  FalGeometry fal;
  fal.volume = interval_from_json(require(v, "volume"));
  if (!(fal.volume.lo() > 0.0)) throw InvalidInput("volume must be positive");
  if (v.contains("systole"))
    fal.systole_lower_bound = interval_from_json(v.at("systole"));
  fal.n = require(v, "n").get<int>();
  if (fal.n < 1) throw InvalidInput("need n >= 1 crossing-circle cusps");
  fal.arithmetic = v.value("arithmetic", false);
  if (v.contains("cusps")) {
    for (const json& c : v.at("cusps")) {
      if (c.is_null())
        fal.cusps.push_back(std::nullopt);
      else
        fal.cusps.push_back(cusp_shape_from_json(c));
    }
  }
  return fal;
}

NerveGraph nerve_from_json(const json& v) {
  NerveGraph g;
  for (const json& f : require(v, "faces")) {
    if (!f.is_array() || f.size() != 3)
      throw InvalidInput("each face must be a 3-element array");
    g.faces.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
  }
  for (const json& e : require(v, "red_edges")) {
    if (!e.is_array() || e.size() != 2)
      throw InvalidInput("each red edge must be a 2-element array");
    g.red_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

json validation_report_to_json(const ValidationReport& rep) {
  json issues = json::array();
  for (const auto& i : rep.issues)
    issues.push_back(json{{"check", i.check}, {"witness", i.witness}});
  return json{{"valid", rep.valid},
              {"vertices", rep.vertices},
              {"edges", rep.edge_count},
              {"faces", rep.face_count},
              {"issues", issues}};
}

QSqrt3 qsqrt3_from_json(const json& v) {
  if (v.is_array()) {
    if (v.size() != 2)
      throw InvalidInput("Q(sqrt3) coefficient pair must have 2 entries");
    return {rational_from_json(v[0]), rational_from_json(v[1])};
  }
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    auto pos = s.find("sqrt3");
    if (pos != std::string::npos) {
      std::string before = s.substr(0, pos);
      if (!before.empty() && before.back() == '*') before.pop_back();
      Rational coeff = before.empty() ? Rational(1) : rational_from_string(before);
      std::string after = s.substr(pos + 5);
      if (!after.empty())
        throw InvalidInput("cannot parse Q(sqrt3) value '" + s + "'");
      return {Rational(0), coeff};
    }
  }
  return {rational_from_json(v), Rational(0)};
}

HoroballPattern pattern_from_json(const json& v) {
  std::vector<QSqrt3> lines;
  for (const json& l : require(v, "lines")) lines.push_back(qsqrt3_from_json(l));
  std::vector<Color> parity;
  for (const json& p : require(v, "parity")) {
    int b = p.get<int>();
    if (b != 0 && b != 1) throw InvalidInput("parity entries must be 0 or 1");
    parity.push_back(b == 0 ? Color::Red : Color::Blue);
  }
  const json& lg = require(v, "longitude");
  if (!lg.is_array() || lg.size() != 2)
    throw InvalidInput("longitude must be a 2-element array");
  QPoint longitude{qsqrt3_from_json(lg[0]), qsqrt3_from_json(lg[1])};
  return generate_pattern(std::move(lines), std::move(parity), longitude);
}

json interval_to_json(const Interval& x) {
  return json::array({double_to_string(x.lo()), double_to_string(x.hi())});
}

json certificate_to_json(const Certificate& cert) {
  json conditions = json::array();
  for (const Condition& c : cert.conditions) {
    conditions.push_back(json{{"name", c.name},
                              {"relation", c.relation},
                              {"lhs", interval_to_json(c.lhs)},
                              {"rhs", interval_to_json(c.rhs)},
                              {"satisfied", c.satisfied},
                              {"margin", double_to_string(c.margin)}});
  }
  json inputs = json::object();
  for (const auto& [key, value] : cert.inputs) inputs[key] = value;
  return json{{"version", kVersion},
              {"verdict", verdict_name(cert.verdict)},
              {"mode", cert.mode},
              {"variant", cert.variant},
              {"inputs", inputs},
              {"conditions", conditions}};
}

std::string certificate_to_text(const Certificate& cert) {
  std::ostringstream out;
  out << "verdict: " << verdict_name(cert.verdict);
  if (!cert.mode.empty()) out << "  (mode " << cert.mode << ")";
  if (!cert.variant.empty()) out << "  (variant " << cert.variant << ")";
  out << "\n";
  if (!cert.inputs.empty()) {
    out << "  inputs:";
    for (const auto& [key, value] : cert.inputs) out << " " << key << "=" << value;
    out << "\n";
  }
  for (const Condition& c : cert.conditions) {
    out << "  [" << (c.satisfied ? "ok" : "VIOLATED") << "] " << c.name << ": "
        << interval_to_string(c.lhs) << " " << c.relation << " "
        << interval_to_string(c.rhs);
    if (c.relation != "echo") out << "  margin " << double_to_string(c.margin);
    out << "\n";
  }
  if (const Condition* v = cert.first_violated())
    out << "  first violated: " << v->name << "\n";
  return out.str();
}

}  // namespace falcert
