#ifndef FALCERT_JSON_IO_HPP
#define FALCERT_JSON_IO_HPP

#include <json.hpp>

#include "falcert/certifier.hpp"
#include "falcert/cusp.hpp"
#include "falcert/horoball.hpp"
#include "falcert/lattice.hpp"
#include "falcert/nerve.hpp"

namespace falcert {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

// Numbers arrive as exact strings ("16.5", "3/4"), JSON integers, or for
// angles, multiples of pi ("pi/2", "3*pi/4").  Non-integer JSON floats are
// rejected: exactness is part of the schema.
Rational rational_from_json(const json& v);
Interval interval_from_json(const json& v);

TranslationLattice<Rational> lattice_from_json(const json& v);
json lattice_to_json(const TranslationLattice<Rational>& lat);
json basis_to_json(const GeometricBasis<Rational>& gb);

CuspShape cusp_shape_from_json(const json& v);
MultiSlope multi_slope_from_json(const json& v);
FalGeometry fal_geometry_from_json(const json& v);

NerveGraph nerve_from_json(const json& v);
json validation_report_to_json(const ValidationReport& rep);

QSqrt3 qsqrt3_from_json(const json& v);
HoroballPattern pattern_from_json(const json& v);

json interval_to_json(const Interval& x);  // [lo, hi] as decimal strings
json certificate_to_json(const Certificate& cert);
std::string certificate_to_text(const Certificate& cert);

}  // namespace falcert

#endif
