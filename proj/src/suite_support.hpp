#pragma once

#include "json.hpp"
#include "twistor/cli.hpp"
#include "twistor/conic_bundle.hpp"
#include "twistor/degeneration.hpp"

namespace twistor::cli {

inline MonopoleConfig monopole_config(const RunConfig& cfg) { return make_config(cfg.monopoles); }

// member_fiber_model(s = 1) with the configured overrides applied.
inline ProjectiveModel fiber_model(const RunConfig& cfg) {
  ProjectiveModel model = member_fiber_model(monopole_config(cfg), 1.0);
  for (const auto& o : cfg.curve_overrides) model.curves.at(o.index) = o.curve;
  return model;
}

// True when the curve is a multiple of uv + lambda with lambda > 0 real.
inline bool normalized_limit_form(const OneOneCurve& k, double& lambda) {
  const OneOneCurve c = k.normalized();
  if (std::abs(c.a) < 1e-14 || std::abs(c.b) > 1e-14 || std::abs(c.c) > 1e-14) return false;
  const Complex l = c.d / c.a;
  if (std::abs(l.imag()) > 1e-14 || !(l.real() > 0.0)) return false;
  lambda = l.real();
  return true;
}

// The lambda -> 0 limit of a model whose first curve has the form uv + lambda.
inline ProjectiveModel limit_model(const ProjectiveModel& model) {
  ProjectiveModel m = model;
  const OneOneCurve c = m.curves.at(0);
  m.curves[0] = {1.0, c.b / c.a, c.c / c.a, c.d / c.a};
  return degenerate_first_curve(m);
}

inline nlohmann::json sphere_json(const SpherePoint& p) {
  return {{p.z0().real(), p.z0().imag()}, {p.z1().real(), p.z1().imag()}};
}

inline nlohmann::json complex_json(Complex z) { return {z.real(), z.imag()}; }

}  // namespace twistor::cli
