// falcert: certified slope-length and Dehn-filling checks for fully
// augmented link complements.
//
// Exit codes: 0 pass/success, 1 certified fail, 2 invalid input, 3 internal
// assertion (always a bug).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "falcert/json_io.hpp"

using namespace falcert;

namespace {

json load_input(const std::string& path, const std::string& inline_json) {
  if (!inline_json.empty()) return json::parse(inline_json);
  if (path.empty()) throw InvalidInput("no --input file or --json literal given");
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

std::vector<long long> parse_q_list(const std::string& s) {
  std::vector<long long> qs;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      qs.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse q value '" + item + "'");
    }
  }
  if (qs.empty()) throw InvalidInput("empty --q list");
  return qs;
}

int emit_certificate(const Certificate& cert, const std::string& format) {
  if (format == "json")
    std::cout << certificate_to_json(cert).dump(2) << "\n";
  else
    std::cout << certificate_to_text(cert);
  return cert.verdict == Verdict::Pass ? 0 : 1;
}

struct Options {
  std::string input, inline_json, format = "text";
  std::string mode = "l4", variant = "as-printed";
  std::string q_list, epsilon, center;
  std::string numeric = "exact";
  long long p = 1;
  long long twist_regions = 0, crossings = 0;
  std::string basis;
  int order = 0;
  bool super = false, sufficient = false, arithmetic_check = false,
       gate = false;
  std::string svg_path;
};

int run_reduce_basis(const Options& opt) {
  auto lat = lattice_from_json(load_input(opt.input, opt.inline_json));
  if (opt.numeric == "interval") {
    TranslationLattice<Interval> ilat{{Interval::from_rational(lat.u.x),
                                       Interval::from_rational(lat.u.y)},
                                      {Interval::from_rational(lat.v.x),
                                       Interval::from_rational(lat.v.y)}};
    auto gb = reduce_basis(ilat);
    if (opt.format == "json") {
      json out{{"a_norm_sq", interval_to_json(norm_sq(gb.a))},
               {"b_norm_sq", interval_to_json(norm_sq(gb.b))},
               {"numeric", "interval"}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "|a|^2 = " << interval_to_string(norm_sq(gb.a)) << "\n"
                << "|b|^2 = " << interval_to_string(norm_sq(gb.b)) << "\n";
    }
    return 0;
  }
  auto gb = reduce_basis(lat);
  if (opt.format == "json")
    std::cout << basis_to_json(gb).dump(2) << "\n";
  else
    std::cout << "a = (" << rational_to_string(gb.a.x) << ", "
              << rational_to_string(gb.a.y) << ")  |a|^2 = "
              << rational_to_string(norm_sq(gb.a)) << "\n"
              << "b = (" << rational_to_string(gb.b.x) << ", "
              << rational_to_string(gb.b.y) << ")  |b|^2 = "
              << rational_to_string(norm_sq(gb.b)) << "\n";
  return 0;
}

int run_sublattices(const Options& opt) {
  auto lat = lattice_from_json(load_input(opt.input, opt.inline_json));
  auto subs = opt.super ? index_two_superlattices(lat) : index_two_sublattices(lat);
  json out = json::array();
  for (const auto& s : subs) {
    json e = lattice_to_json(s);
    Rational cov = s.covolume_signed();
    if (cov < 0) cov = -cov;
    e["covolume"] = rational_to_string(cov);
    e["reduced"] = basis_to_json(reduce_basis(s));
    out.push_back(e);
  }
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : out)
      std::cout << (opt.super ? "superlattice" : "sublattice") << " u=" << e["u"]
                << " v=" << e["v"] << " covolume=" << e["covolume"] << "\n";
  }
  return 0;
}

int run_slope_length(const Options& opt) {
  CuspShape c = cusp_shape_from_json(load_input(opt.input, opt.inline_json));
  auto qs = parse_q_list(opt.q_list);
  if (qs.size() != 1) throw InvalidInput("slope-length takes a single --q");
  Slope s = make_slope(opt.p, qs[0]);
  Interval e = euclidean_length_sq(c, s);
  Interval n = normalized_length_sq(c, s);
  Interval b = normalized_length_sq_lower_bound(c, s);
  bool sign_ok = cross_term_sign_ok(c, s);
  if (opt.format == "json") {
    json out{{"euclidean_length_sq", interval_to_json(e)},
             {"normalized_length_sq", interval_to_json(n)},
             {"normalized_length_sq_lower_bound", interval_to_json(b)},
             {"lower_bound_sign_condition", sign_ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "euclidean length^2  " << interval_to_string(e) << "\n"
              << "normalized length^2 " << interval_to_string(n) << "\n"
              << "printed lower bound " << interval_to_string(b) << "\n";
    if (!sign_ok)
      std::cout << "warning: p q cos(theta) < 0; the printed bound is not "
                   "implied by the exact value here\n";
  }
  return 0;
}

int run_certify(const Options& opt) {
  FalGeometry fal = fal_geometry_from_json(load_input(opt.input, opt.inline_json));
  std::optional<Interval> eps;
  if (!opt.epsilon.empty()) eps = dec(opt.epsilon);
  Certificate cert;
  if (opt.gate) {
    Interval e = eps ? *eps : default_epsilon(fal);
    cert = nonarithmetic_gate(e, fal.volume);
  } else if (opt.arithmetic_check) {
    cert = arithmetic_sufficient_condition(fal.n, parse_q_list(opt.q_list),
                                           fal.arithmetic);
  } else if (opt.sufficient) {
    // Volume-free sufficient condition; epsilon defaults to the largest
    // admissible value for the geometry.
    Interval e = eps ? *eps : default_epsilon(fal);
    cert = fal_sufficient_condition(fal.n, e, parse_q_list(opt.q_list),
                                    variant_from_name(opt.variant));
  } else {
    cert = certify_twisted_filling(fal, parse_q_list(opt.q_list), eps,
                                   bound_mode_from_name(opt.mode));
  }
  return emit_certificate(cert, opt.format);
}

int run_min_q(const Options& opt) {
  FalGeometry fal = fal_geometry_from_json(load_input(opt.input, opt.inline_json));
  std::optional<Interval> eps;
  if (!opt.epsilon.empty()) eps = dec(opt.epsilon);
  long long q = min_uniform_q(fal, eps, bound_mode_from_name(opt.mode));
  if (opt.format == "json")
    std::cout << json{{"min_uniform_q", q}, {"mode", opt.mode}}.dump(2) << "\n";
  else
    std::cout << q << "\n";
  return 0;
}

int run_commensurability(const Options& opt) {
  std::optional<GeometricBasis<Rational>> basis;
  if (!opt.basis.empty()) {
    std::stringstream ss(opt.basis);
    std::string item;
    std::vector<Rational> coords;
    while (std::getline(ss, item, ',')) coords.push_back(rational_from_string(item));
    if (coords.size() != 4)
      throw InvalidInput("--basis needs a2x,a2y,b2x,b2y");
    basis = geometric_basis_checked<Rational>({coords[0], coords[1]},
                                              {coords[2], coords[3]});
  }
  Certificate cert =
      certify_commensurability_hypotheses(opt.twist_regions, opt.crossings, basis);
  return emit_certificate(cert, opt.format);
}

int run_nervecheck(const Options& opt) {
  NerveGraph g = nerve_from_json(load_input(opt.input, opt.inline_json));
  ValidationReport rep = validate_nerve(g);
  json out = validation_report_to_json(rep);
  if (rep.valid) {
    auto disk = unique_crossing_disk_circle(g);
    out["uniquely_disked_red_edge"] = json::array({disk.first, disk.second});
    json cycles = json::object();
    for (auto red : g.red_edges) {
      auto cs = generalized_crossing_disk_cycles(g, red);
      cycles[std::to_string(red.first) + "," + std::to_string(red.second)] =
          cs.size();
    }
    out["nontrivial_cycles_per_red_edge"] = cycles;
  }
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (rep.valid ? "valid nerve" : "INVALID nerve") << " (V="
              << rep.vertices << " E=" << rep.edge_count << " F=" << rep.face_count
              << ")\n";
    for (const auto& i : rep.issues)
      std::cout << "  violated " << i.check << ": " << i.witness << "\n";
    if (rep.valid)
      std::cout << "uniquely disked red edge: " << out["uniquely_disked_red_edge"]
                << "\n";
  }
  return rep.valid ? 0 : 1;
}

int run_horoball(const Options& opt) {
  HoroballPattern p = pattern_from_json(load_input(opt.input, opt.inline_json));
  if (!opt.svg_path.empty()) {
    std::ofstream out(opt.svg_path);
    out << svg_fundamental_domain(p);
  }
  if (opt.order != 0) {
    if (opt.center.empty()) throw InvalidInput("--order needs --center x,y");
    std::stringstream ss(opt.center);
    std::string xs, ys;
    if (!std::getline(ss, xs, ',') || !std::getline(ss, ys, ','))
      throw InvalidInput("--center needs x,y");
    QPoint center{qsqrt3_from_json(json(xs)), qsqrt3_from_json(json(ys))};
    bool symmetric = rotation_symmetry_test(p, {opt.order, center});
    if (opt.format == "json")
      std::cout << json{{"order", opt.order},
                        {"center", json::array({center.x.str(), center.y.str()})},
                        {"symmetric", symmetric}}
                       .dump(2)
                << "\n";
    else
      std::cout << "order-" << opt.order << " rotation about (" << center.x.str()
                << ", " << center.y.str() << "): "
                << (symmetric ? "symmetry" : "not a symmetry") << "\n";
    return symmetric ? 0 : 1;
  }

  // Default report: order-3 obstruction and order-4 classification.
  Order3Report o3 = order3_obstruction(p);
  Order4Classification o4 = classify_order4(p);
  if (opt.format == "json") {
    json fixed = json::array();
    for (const auto& f : o4.blue_fixed_points)
      fixed.push_back(json::array({f.x.str(), f.y.str()}));
    json out{{"order3",
              {{"lines_on_sqrt3_lattice", o3.lines_on_sqrt3_lattice},
               {"interstitial_radius", o3.interstitial_radius.str()},
               {"radius_equation_residual", o3.radius_equation_residual.str()},
               {"tangency_gap", interval_to_json(o3.gap_value)},
               {"gap_certified", o3.gap_certified},
               {"conclusion", o3.conclusion}}},
             {"order4",
              {{"type", order4_type_name(o4.type)},
               {"square_verified", o4.square_verified},
               {"blue_fixed_points", fixed}}}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "order-3: lines on sqrt3 lattice: "
              << (o3.lines_on_sqrt3_lattice ? "yes" : "no") << "\n"
              << "  interstitial radius " << o3.interstitial_radius.str()
              << ", residual " << o3.radius_equation_residual.str() << "\n"
              << "  tangency gap " << interval_to_string(o3.gap_value)
              << (o3.gap_certified ? " (certified)" : "") << "\n"
              << "  " << o3.conclusion << "\n"
              << "order-4: " << order4_type_name(o4.type);
    if (o4.type == Order4Classification::Type::Even) {
      std::cout << ", side-2 square "
                << (o4.square_verified ? "verified" : "UNVERIFIED") << ", "
                << o4.blue_fixed_points.size() << " blue order-4 fixed points";
    }
    std::cout << "\n";
  }
  return 0;
}

int run_constants(const Options& opt) {
  Interval v0 = regular_ideal_tet_volume();
  Interval guard = Interval(1.0) /
                   (Interval(2.0) * int_pi() / geometry_constant_C(int_log3()) +
                    dec("28.78"));
  json out{{"v0", interval_to_json(v0)},
           {"v0_over_4", interval_to_json(v0 / Interval(4.0))},
           {"two_v0", interval_to_json(Interval(2.0) * v0)},
           {"pi", interval_to_json(int_pi())},
           {"log3", interval_to_json(int_log3())},
           {"sqrt3", interval_to_json(int_sqrt3())},
           {"c345_over_8", interval_to_json(dec("3.45") / Interval(8.0))},
           {"arithmetic_geodesic_bound", "0.43137"},
           {"geometry_guard_at_log3", interval_to_json(guard)}};
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "v0 (regular ideal tetrahedron) " << interval_to_string(v0) << "\n"
            << "v0/4                           "
            << interval_to_string(v0 / Interval(4.0)) << "\n"
            << "2*v0                           "
            << interval_to_string(Interval(2.0) * v0) << "\n"
            << "pi                             " << interval_to_string(int_pi())
            << "\n"
            << "log 3                          " << interval_to_string(int_log3())
            << "\n"
            << "3.45/8 = 0.43125 < 0.43137     "
            << interval_to_string(dec("3.45") / Interval(8.0)) << "\n"
            << "1/(2pi/C(log3)+28.78)          " << interval_to_string(guard)
            << "  (<= 0.0000086)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified checks for twisted Dehn fillings of fully augmented links"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "input JSON file");
    sub->add_option("--json", opt.inline_json, "inline JSON literal");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* reduce = app.add_subcommand("reduce-basis", "geometric basis of a lattice");
  add_io(reduce);
  add_format(reduce);
  reduce->add_option("--numeric", opt.numeric, "exact | interval")
      ->check(CLI::IsMember({"exact", "interval"}));

  auto* subl = app.add_subcommand("sublattices", "index-2 sub/superlattices");
  add_io(subl);
  add_format(subl);
  subl->add_flag("--super", opt.super, "superlattices instead of sublattices");

  auto* slope = app.add_subcommand("slope-length", "slope lengths on a cusp");
  add_io(slope);
  add_format(slope);
  slope->add_option("--p", opt.p, "slope numerator (default 1)");
  slope->add_option("--q", opt.q_list, "slope denominator")->required();

  auto* certify = app.add_subcommand("certify", "certify a twisted filling");
  add_io(certify);
  add_format(certify);
  certify->add_option("--mode", opt.mode, "exact | paper-bound | purcell | l4");
  certify->add_option("--q", opt.q_list, "comma-separated q per crossing circle");
  certify->add_option("--epsilon", opt.epsilon,
                      "epsilon (default: min{systole/1.001, log 3})");
  certify->add_flag("--sufficient", opt.sufficient,
                    "volume-free sufficient condition instead of the direct check");
  certify->add_option("--variant", opt.variant,
                      "as-printed | corrected (with --sufficient)")
      ->check(CLI::IsMember({"as-printed", "corrected"}));
  certify->add_flag("--arithmetic", opt.arithmetic_check,
                    "arithmetic specialization at epsilon = 0.86168");
  certify->add_flag("--gate", opt.gate,
                    "non-arithmeticity gate only (no filling parameters)");

  auto* minq = app.add_subcommand("min-q", "smallest certifying uniform q");
  add_io(minq);
  add_format(minq);
  minq->add_option("--mode", opt.mode, "purcell | l4");
  minq->add_option("--epsilon", opt.epsilon, "epsilon override");

  auto* comm = app.add_subcommand("commensurability",
                                  "hypothesis checks for commensurability");
  add_format(comm);
  comm->add_option("--twist-regions", opt.twist_regions)->required();
  comm->add_option("--crossings", opt.crossings)->required();
  comm->add_option("--basis", opt.basis, "cusp basis a2x,a2y,b2x,b2y");

  auto* nerve = app.add_subcommand("nervecheck", "validate a nerve graph");
  add_io(nerve);
  add_format(nerve);

  auto* horo = app.add_subcommand("horoball", "horoball pattern analysis");
  add_io(horo);
  add_format(horo);
  horo->add_option("--order", opt.order, "rotation order 2|3|4");
  horo->add_option("--center", opt.center, "rotation center x,y");
  horo->add_option("--svg", opt.svg_path, "write an SVG of the fundamental domain");

  auto* consts = app.add_subcommand("constants", "certified constants");
  add_format(consts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*reduce) return run_reduce_basis(opt);
    if (*subl) return run_sublattices(opt);
    if (*slope) return run_slope_length(opt);
    if (*certify) return run_certify(opt);
    if (*minq) return run_min_q(opt);
    if (*comm) return run_commensurability(opt);
    if (*nerve) return run_nervecheck(opt);
    if (*horo) return run_horoball(opt);
    if (*consts) return run_constants(opt);
    throw InternalError("no subcommand dispatched");
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return 3;
  }
}
