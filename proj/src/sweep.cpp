#include <cmath>

#include "suite_support.hpp"
#include "twistor/errors.hpp"

namespace twistor::cli {

using nlohmann::json;

namespace {

json singular_json(const std::vector<SingularPointReport>& pts) {
  json out = json::array();
  for (const auto& p : pts) {
    out.push_back({{"u", sphere_json(p.base.u)},
                   {"v", sphere_json(p.base.v)},
                   {"curves", {p.curve_indices.first, p.curve_indices.second}},
                   {"classification", to_string(p.classification)}});
  }
  return out;
}

bool all_odp(const std::vector<SingularPointReport>& pts) {
  for (const auto& p : pts) {
    if (p.classification != Singularity::OrdinaryDoublePoint) return false;
  }
  return true;
}

json s_record(const RunConfig& cfg, const MonopoleConfig& mc, double s) {
  json rec{{"value", s}};
  if (s == 0.0) {
    const HitchinModel hm = hitchin_limit(mc);
    json polys = json::array();
    for (const auto& p : hm.polys) {
      polys.push_back({complex_json(p.a), complex_json(p.b), complex_json(p.c)});
    }
    rec["hitchin_coefficients"] = polys;
    const BiPoly central = central_fiber_pullback(mc);
    const BiPoly expect = uv_plus_one_power(mc.n);
    json coeffs = json::array();
    bool exact = true;
    for (int k = 0; k <= mc.n; ++k) coeffs.push_back(central.coeff(k, k).real());
    for (int i = 0; i <= mc.n; ++i) {
      for (int j = 0; j <= mc.n; ++j) exact = exact && central.coeff(i, j) == expect.coeff(i, j);
    }
    rec["central_fiber_uv_coefficients"] = coeffs;
    rec["central_fiber_is_uv_plus_one_power"] = exact;
    json roots = json::array();
    if (hm.n() >= 2) {
      for (const auto& x : hitchin_pairwise_intersections(hm)) {
        roots.push_back({{"pair", {x.i, x.j}},
                         {"first", sphere_json(x.first)},
                         {"second", sphere_json(x.second)},
                         {"tangent", x.tangent},
                         {"conjugacy_residual", x.conjugacy_residual}});
      }
    }
    rec["hitchin_intersections"] = roots;
    rec["diagnostics"] = json::array();
    if (!exact) rec["diagnostics"].push_back("central fiber differs from (uv + 1)^n");
    rec["status"] = exact ? "PASS" : "FAIL";
    return rec;
  }

  ProjectiveModel model;
  try {
    model = member_fiber_model(mc, s);
  } catch (const DomainError& e) {
    rec["status"] = "INVALID";
    rec["error"] = e.what();
    return rec;
  }
  json diagnostics = json::array();
  json curves = json::array();
  for (std::size_t i = 0; i < model.curves.size(); ++i) {
    const auto& k = model.curves[i];
    curves.push_back({complex_json(k.a), complex_json(k.b), complex_json(k.c), complex_json(k.d)});
    if (!k.is_swap_real() || !real_point_free(k, RealStructure::Swap)) {
      diagnostics.push_back("curve " + std::to_string(i) + " is not real-point free");
    }
  }
  rec["curves"] = curves;
  const auto pts = singular_points(model);
  rec["singular_point_count"] = pts.size();
  if (pts.size() != static_cast<std::size_t>(mc.n * (mc.n - 1))) {
    diagnostics.push_back("expected " + std::to_string(mc.n * (mc.n - 1)) + " singular points");
  }
  if (!all_odp(pts)) diagnostics.push_back("singular point not classified ODP");
  json xs = json::array();
  for (const auto& x : pairwise_intersections(model)) {
    json item{{"pair", {x.i, x.j}}, {"tangent", x.tangent}};
    item["first"] = {{"u", sphere_json(x.first.u)}, {"v", sphere_json(x.first.v)}};
    item["second"] = {{"u", sphere_json(x.second.u)}, {"v", sphere_json(x.second.v)}};
    try {
      item["hitchin_first"] = sphere_json(hitchin_coordinate(x.first));
      item["hitchin_second"] = sphere_json(hitchin_coordinate(x.second));
    } catch (const DegenerateInputError&) {
      item["hitchin_first"] = nullptr;
      item["hitchin_second"] = nullptr;
    }
    xs.push_back(item);
  }
  rec["intersections"] = xs;
  const double inv = verify_real_invariance(model, RealStructure::Swap,
                                            std::min<std::size_t>(cfg.samples, 100), cfg.seed);
  rec["real_invariance_residual"] = inv;
  if (!(inv < cfg.tolerances.at("invariance"))) diagnostics.push_back("real structure lift residual");
  rec["diagnostics"] = diagnostics;
  rec["status"] = diagnostics.empty() ? "PASS" : "FAIL";
  return rec;
}

SpherePoint sphere_from_json(const json& j) {
  return SpherePoint(Complex(j[0][0].get<double>(), j[0][1].get<double>()),
                     Complex(j[1][0].get<double>(), j[1][1].get<double>()));
}

// Max over pairs of the matched chordal distance between intersection points (in the Hitchin
// coordinate) and the roots of p_i - p_j.
double limit_distance(const json& rec, const json& limit) {
  double worst = 0.0;
  const auto& xs = rec["intersections"];
  const auto& roots = limit["hitchin_intersections"];
  for (std::size_t k = 0; k < xs.size() && k < roots.size(); ++k) {
    if (xs[k]["hitchin_first"].is_null()) return std::numeric_limits<double>::infinity();
    const SpherePoint a = sphere_from_json(xs[k]["hitchin_first"]);
    const SpherePoint b = sphere_from_json(xs[k]["hitchin_second"]);
    const SpherePoint r1 = sphere_from_json(roots[k]["first"]);
    const SpherePoint r2 = sphere_from_json(roots[k]["second"]);
    const double straight = std::max(chordal_distance(a, r1), chordal_distance(b, r2));
    const double crossed = std::max(chordal_distance(a, r2), chordal_distance(b, r1));
    worst = std::max(worst, std::min(straight, crossed));
  }
  return worst;
}

json lambda_record(const ProjectiveModel& base, double lambda) {
  json rec{{"value", lambda}};
  if (!(lambda >= 0.0)) {
    rec["status"] = "INVALID";
    rec["error"] = "lambda must be >= 0 (uv + lambda has real points for lambda < 0)";
    return rec;
  }
  ProjectiveModel model = base;
  model.curves[0] = {1.0, 0.0, 0.0, lambda};
  const auto pts = singular_points(model);
  const std::size_t n = static_cast<std::size_t>(model.n);
  const std::size_t expected = lambda == 0.0 ? (2 * n - 1) + (n - 1) * (n - 2) : n * (n - 1);
  rec["singular_point_count"] = pts.size();
  rec["expected_count"] = expected;
  rec["singular_points"] = singular_json(pts);
  json diagnostics = json::array();
  if (pts.size() != expected) diagnostics.push_back("singular point count differs from expected");
  if (!all_odp(pts)) diagnostics.push_back("singular point not classified ODP");
  rec["diagnostics"] = diagnostics;
  rec["status"] = diagnostics.empty() ? "PASS" : "FAIL";
  return rec;
}

}  // namespace

json run_sweep(const RunConfig& cfg) {
  if (!cfg.sweep) throw ConfigError("config field 'sweep': missing; required by the sweep command");
  if (cfg.monopoles.empty()) {
    throw ConfigError("config field 'monopoles': missing; required by the sweep command");
  }
  json report;
  report["version"] = kVersion;
  report["seed"] = cfg.seed;
  report["config_digest"] = config_digest(cfg);
  report["parameter"] = cfg.sweep->parameter;
  json records = json::array();
  bool pass = true;

  if (cfg.sweep->parameter == "s") {
    const MonopoleConfig mc = monopole_config(cfg);
    const json* limit = nullptr;
    for (double s : cfg.sweep->values) records.push_back(s_record(cfg, mc, s));
    for (const auto& r : records) {
      if (r["value"].get<double>() == 0.0) limit = &r;
    }
    for (auto& r : records) {
      const double s = r["value"].get<double>();
      if (limit && s != 0.0 && r["status"] != "INVALID" && mc.n >= 2) {
        const double dist = limit_distance(r, *limit);
        r["distance_to_hitchin_limit"] = dist;
        if (std::abs(s) <= 0.1 && !(dist < cfg.tolerances.at("convergence"))) {
          r["status"] = "FAIL";
          r["diagnostics"].push_back("intersections do not approach the Hitchin roots");
        }
      }
      pass = pass && r["status"] != "FAIL";
    }
  } else {
    const ProjectiveModel base = fiber_model(cfg);
    double lambda = 0.0;
    if (!normalized_limit_form(base.curves[0], lambda)) {
      throw ConfigError(
          "config field 'monopoles[0]': the lambda sweep needs a first curve of the form "
          "uv + lambda (a monopole with c = 0 and |b| < 1)");
    }
    for (double l : cfg.sweep->values) {
      records.push_back(lambda_record(base, l));
      pass = pass && records.back()["status"] != "FAIL";
    }
  }
  report["records"] = records;
  report["status"] = pass ? "PASS" : "FAIL";
  return report;
}

}  // namespace twistor::cli
