#include <chrono>
#include <cmath>
#include <sstream>

#include "suite_support.hpp"
#include "twistor/errors.hpp"
#include "twistor/kernels.hpp"
#include "twistor/sampling.hpp"
#include "twistor/twistor_lines.hpp"

namespace twistor::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxDiagnostics = 20;

struct Checker {
  SuiteResult& out;

  void residual(double v) {
    if (std::isnan(v)) {
      fail("NaN residual");
      return;
    }
    out.max_residual = std::max(out.max_residual, v);
  }
  void fail(const std::string& msg) {
    out.pass = false;
    if (out.diagnostics.size() < kMaxDiagnostics) out.diagnostics.push_back(msg);
  }
  void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

double tol(const RunConfig& cfg, const char* key) { return cfg.tolerances.at(key); }

// ---------------------------------------------------------------------------------------------

void identities(const RunConfig& cfg, Checker& ck) {
  const double eps = tol(cfg, "identity");
  double worst_line = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const CoincidentModel m(n);
    const ProjectiveModel x0 = m.model();
    const double w = kernels::max_over(kernels::Exec::Parallel, cfg.samples, [&](std::size_t i) {
      const TwistorLineParams L = random_line_params(cfg.seed + n, i);
      Sampler rng(cfg.seed, "identity-t-" + std::to_string(n), i);
      return defining_residual(x0, line_eval(m, L, rng.sphere_point()));
    });
    worst_line = std::max(worst_line, w);
  }
  ck.residual(worst_line);
  ck.require(worst_line < eps, "xi eta = (u - v)^n residual " + fmt(worst_line));
  ck.out.counts["line_identity_samples"] = 6 * cfg.samples;

  // u(t) - v(t) against the closed form (1+|d|^2)(1-r^2) t / ((1 + r conj(d) t)(r + conj(d) t)).
  const double diff = kernels::max_over(kernels::Exec::Parallel, cfg.samples, [&](std::size_t i) {
    Sampler rng(cfg.seed, "difference", i);
    const Complex d = rng.uniform_box(2.0);
    const double r = rng.uniform(0.05, 0.95);
    const Complex t = rng.uniform_box(2.0);
    const QPoint q = minitwistor_curve_eval(SpherePoint::affine(d), r, SpherePoint::affine(t));
    const Complex lhs = q.u.value() - q.v.value();
    const Complex rhs = (1.0 + std::norm(d)) * (1.0 - r * r) * t /
                        ((1.0 + r * std::conj(d) * t) * (r + std::conj(d) * t));
    return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
  });
  ck.residual(diff);
  ck.require(diff < eps, "u - v closed form residual " + fmt(diff));

  const double quad = kernels::max_over(kernels::Exec::Parallel, cfg.samples, [&](std::size_t i) {
    Sampler rng(cfg.seed, "quadric", i);
    const QPoint q = rng.q_point();
    const Complex s = rng.log_uniform_polar(0.01, 2.0);
    const auto p = phi_inverse(q, s).p;
    return quadric_residual(p, s) / std::max(1.0, std::norm(s));
  });
  ck.residual(quad);
  ck.require(quad < eps, "quadric parametrization residual " + fmt(quad));

  if (!cfg.monopoles.empty()) {
    const auto mc = monopole_config(cfg);
    const BiPoly got = central_fiber_pullback(mc);
    const BiPoly want = uv_plus_one_power(cfg.n);
    bool exact = true;
    for (int i = 0; i <= cfg.n; ++i) {
      for (int j = 0; j <= cfg.n; ++j) exact = exact && got.coeff(i, j) == want.coeff(i, j);
    }
    ck.require(exact, "central fiber pullback differs from (uv + 1)^n");
    ck.out.counts["central_fiber_exact"] = exact;

    double plane = 0.0;
    for (std::size_t k = 0; k < mc.points.size(); ++k) {
      plane = std::max(plane, kernels::max_over(kernels::Exec::Parallel, cfg.samples, [&](std::size_t i) {
        Sampler rng(cfg.seed, "plane-pullback-" + std::to_string(k), i);
        return plane_pullback_residual(mc.points[k], rng.uniform(-1.0, 1.0), rng.q_point());
      }));
    }
    ck.residual(plane);
    ck.require(plane < eps, "plane pullback residual " + fmt(plane));
  }
}

// ---------------------------------------------------------------------------------------------

void twistor_lines_suite(const RunConfig& cfg, Checker& ck) {
  const std::size_t per_n = std::max<std::size_t>(1, cfg.samples / 5);
  double worst_hd = 0.0;
  double worst_c = 0.0;
  std::size_t failures = 0;
  for (int n = 1; n <= 5; ++n) {
    const CoincidentModel m(n);
    std::vector<double> hd(per_n, 0.0);
    std::vector<double> cm(per_n, 0.0);
    std::vector<std::string> err(per_n);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long ii = 0; ii < static_cast<long long>(per_n); ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      const TwistorLineParams L = random_line_params(cfg.seed + 100 + n, i);
      Sampler rng(cfg.seed, "round-trip-t-" + std::to_string(n), i);
      try {
        const FiberPoint p = line_eval(m, L, rng.sphere_point());
        const LineSolution sol = solve_line_through_point(m, p);
        hd[i] = line_hausdorff(m, L, sol.params, 20);
        cm[i] = sol.c_modulus_error;
      } catch (const std::exception& e) {
        err[i] = e.what();
      }
    }
    for (std::size_t i = 0; i < per_n; ++i) {
      if (!err[i].empty()) {
        ++failures;
        ck.fail("n = " + std::to_string(n) + " round trip " + std::to_string(i) + ": " + err[i]);
        continue;
      }
      worst_hd = std::max(worst_hd, hd[i]);
      worst_c = std::max(worst_c, cm[i]);
    }
  }
  ck.residual(worst_hd);
  ck.residual(worst_c);
  ck.require(worst_hd < tol(cfg, "round_trip"), "round trip Hausdorff distance " + fmt(worst_hd));
  ck.require(worst_c < tol(cfg, "unit_c"), "recovered ||c| - 1| " + fmt(worst_c));
  ck.out.counts["round_trips"] = 5 * per_n;
  ck.out.counts["round_trip_failures"] = failures;
  ck.out.counts["max_hausdorff"] = worst_hd;
  ck.out.counts["max_c_modulus_error"] = worst_c;

  // Distinct lines are disjoint, including two lines over the same minitwistor curve.
  const std::size_t pairs = std::max<std::size_t>(2, cfg.samples / 100);
  double min_gap = std::numeric_limits<double>::infinity();
  const CoincidentModel m2(2);
  for (std::size_t i = 0; i < pairs; ++i) {
    const TwistorLineParams a = random_line_params(cfg.seed + 7, 2 * i);
    TwistorLineParams b = random_line_params(cfg.seed + 7, 2 * i + 1);
    if (i % 2 == 0) {
      b.d = a.d;
      b.r = a.r;
    }
    min_gap = std::min(min_gap, foliation_disjointness(m2, a, b, 200));
  }
  ck.require(min_gap > tol(cfg, "disjoint"), "distinct lines meet: distance " + fmt(min_gap));
  ck.out.counts["disjoint_pairs"] = pairs;
  ck.out.counts["min_line_distance"] = min_gap;

  // Lines avoid L_infinity and are real.
  const std::size_t nlines = std::min<std::size_t>(100, cfg.samples);
  const double l_inf = kernels::min_over(kernels::Exec::Parallel, nlines, [&](std::size_t i) {
    const TwistorLineParams L = random_line_params(cfg.seed + 11, i);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : sample_line(m2, L, 200)) best = std::min(best, distance_to_l_infinity(p));
    return best;
  });
  ck.require(l_inf > tol(cfg, "l_infinity"), "line approaches L_infinity: " + fmt(l_inf));
  ck.out.counts["min_distance_to_l_infinity"] = l_inf;

  const double reality = kernels::max_over(kernels::Exec::Parallel, cfg.samples, [&](std::size_t i) {
    const TwistorLineParams L = random_line_params(cfg.seed + 13, i);
    Sampler rng(cfg.seed, "line-reality", i);
    return line_reality_defect(CoincidentModel(1 + static_cast<int>(i % 4)), L,
                               rng.sphere_point());
  });
  ck.residual(reality);
  ck.require(reality < tol(cfg, "invariance"), "line reality defect " + fmt(reality));

  // Strict monotonicity of f_r and a -> g_a.
  std::size_t violations = 0;
  constexpr int kGrid = 1000;
  for (int n = 1; n <= 6; ++n) {
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= kGrid; ++k) {
      const double v = f_r(n, static_cast<double>(k) / (kGrid + 1));
      if (!(v < prev)) ++violations;
      prev = v;
    }
    for (double vmod : {0.25, 1.0, 3.0}) {
      prev = std::numeric_limits<double>::infinity();
      for (int k = 1; k <= kGrid; ++k) {
        const double v = g_a(n, vmod, -1.0 + static_cast<double>(k) / (kGrid + 1));
        if (!(v < prev)) ++violations;
        prev = v;
      }
    }
  }
  ck.require(violations == 0, std::to_string(violations) + " monotonicity violations");
  ck.out.counts["monotonicity_violations"] = violations;

  double min_real = std::numeric_limits<double>::infinity();
  double invariance = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const CoincidentModel m(n);
    min_real = std::min(min_real, no_real_point_check(m, cfg.samples, cfg.seed + n));
    invariance = std::max(invariance, verify_real_invariance(m.model(), RealStructure::AntipodalPair,
                                                             cfg.samples, cfg.seed + n));
  }
  ck.residual(invariance);
  ck.require(min_real > tol(cfg, "real_point"), "X_0 comes close to a real point: " + fmt(min_real));
  ck.require(invariance < tol(cfg, "invariance"), "X_0 real structure residual " + fmt(invariance));
  ck.out.counts["min_real_point_distance"] = min_real;
}

// ---------------------------------------------------------------------------------------------

std::size_t count_on_uv_zero(const std::vector<SingularPointReport>& pts) {
  std::size_t k = 0;
  for (const auto& p : pts) {
    if (std::abs(p.base.u.z0() * p.base.v.z0()) <= 1e-9) ++k;
  }
  return k;
}

void singularities(const RunConfig& cfg, Checker& ck) {
  const ProjectiveModel model = fiber_model(cfg);
  for (int i = 0; i < model.n; ++i) {
    ck.require(model.curves[i].is_swap_real(), "curve " + std::to_string(i) + " is not real");
  }
  try {
    const double inv = verify_real_invariance(model, RealStructure::Swap,
                                              std::min<std::size_t>(cfg.samples, 200), cfg.seed);
    ck.residual(inv);
    ck.require(inv < tol(cfg, "invariance"), "swap lift residual " + fmt(inv));
  } catch (const DomainError& e) {
    ck.fail(e.what());
  }

  const auto pts = singular_points(model);
  std::size_t odp = 0;
  for (const auto& p : pts) odp += p.classification == Singularity::OrdinaryDoublePoint;
  const std::size_t expected = static_cast<std::size_t>(model.n * (model.n - 1));
  ck.require(pts.size() == expected, "expected " + std::to_string(expected) +
                                         " singular points, found " + std::to_string(pts.size()));
  ck.require(odp == pts.size(), std::to_string(pts.size() - odp) + " singular points are not ODP");
  ck.out.counts["singular_points"] = pts.size();
  ck.out.counts["ordinary_double_points"] = odp;

  double conj = 0.0;
  for (const auto& x : pairwise_intersections(model)) {
    conj = std::max(conj, chordal_distance(sigma_q(RealStructure::Swap, x.first), x.second));
  }
  ck.residual(conj);
  ck.require(conj < tol(cfg, "conjugacy"), "intersections not conjugate: " + fmt(conj));

  double lambda = 0.0;
  if (normalized_limit_form(model.curves[0], lambda)) {
    const auto limit = singular_points(limit_model(model));
    std::size_t lodp = 0;
    for (const auto& p : limit) lodp += p.classification == Singularity::OrdinaryDoublePoint;
    const std::size_t on_uv = count_on_uv_zero(limit);
    const std::size_t n = static_cast<std::size_t>(model.n);
    const std::size_t others = (n - 1) * (n - 2);
    ck.require(on_uv == 2 * n - 1, "limit model: " + std::to_string(on_uv) +
                                       " singular points over uv = 0, expected " +
                                       std::to_string(2 * n - 1));
    ck.require(limit.size() == 2 * n - 1 + others,
               "limit model: " + std::to_string(limit.size()) + " singular points in total");
    ck.require(lodp == limit.size(), "limit model: not all singular points are ODP");
    ck.out.counts["limit_lambda"] = lambda;
    ck.out.counts["limit_singular_points"] = limit.size();
    ck.out.counts["limit_on_uv_zero"] = on_uv;
    ck.out.counts["limit_ordinary_double_points"] = lodp;
  } else {
    ck.out.counts["limit_singular_points"] = "skipped: first curve is not uv + lambda";
  }
}

// ---------------------------------------------------------------------------------------------

void degeneration(const RunConfig& cfg, Checker& ck) {
  const auto mc = monopole_config(cfg);
  double round_trip = 0.0;
  double equivariance = 0.0;
  for (double s : {1.0, 0.5, -0.5, 0.01}) {
    round_trip = std::max(round_trip, kernels::max_over(kernels::Exec::Parallel, cfg.samples, [&](std::size_t i) {
      Sampler rng(cfg.seed, "phi-round-trip", i);
      const QPoint q = rng.q_point();
      return chordal_distance(phi(phi_inverse(q, s)), q);
    }));
    equivariance = std::max(equivariance, kernels::max_over(kernels::Exec::Parallel, cfg.samples, [&](std::size_t i) {
      Sampler rng(cfg.seed, "phi-equivariance", i);
      const QPoint q = rng.q_point();
      const auto lhs = phi_inverse(sigma_q(RealStructure::Swap, q), s).p;
      const auto rhs = sigma_cp3(phi_inverse(q, s).p, s).first;
      return fs_distance(lhs, rhs);
    }));
  }
  ck.residual(round_trip);
  ck.residual(equivariance);
  ck.require(round_trip < tol(cfg, "phi"), "phi round trip " + fmt(round_trip));
  ck.require(equivariance < tol(cfg, "phi"), "phi_inverse equivariance " + fmt(equivariance));

  json divisors = json::array();
  for (double s : {1.0, 0.5, 0.01}) {
    const auto rep = divisor_restriction_check(s, 64, cfg.seed);
    ck.require(rep.d1_class_10 && rep.d2_class_01,
               "divisor classes wrong at s = " + fmt(s));
    ck.require(rep.sigma_exchange_residual < 1e-12, "sigma does not exchange the divisors");
    ck.residual(rep.sigma_exchange_residual);
    divisors.push_back({{"s", s},
                        {"D1", rep.d1_class_10 ? "(1,0)" : "?"},
                        {"D2", rep.d2_class_01 ? "(0,1)" : "?"}});
  }
  ck.out.counts["divisor_classes"] = divisors;

  // s = 1 reproduces the LeBrun curves, which are the plane sections pulled back.
  const ProjectiveModel at_one = member_fiber_model(mc, 1.0);
  double reproduce = 0.0;
  for (std::size_t k = 0; k < mc.points.size(); ++k) {
    const OneOneCurve want = curve_from_monopole(mc.points[k], 1.0);
    const OneOneCurve got = at_one.curves[k];
    reproduce = std::max({reproduce, std::abs(got.a - want.a), std::abs(got.b - want.b),
                          std::abs(got.c - want.c), std::abs(got.d - want.d)});
  }
  ck.residual(reproduce);
  ck.require(reproduce < tol(cfg, "reproduce"), "member_fiber_model(1) differs: " + fmt(reproduce));
  double pullback = 0.0;
  for (std::size_t k = 0; k < mc.points.size(); ++k) {
    pullback = std::max(pullback, kernels::max_over(kernels::Exec::Parallel, cfg.samples, [&](std::size_t i) {
      Sampler rng(cfg.seed, "reproduce", i);
      return plane_pullback_residual(mc.points[k], 1.0, rng.q_point());
    }));
  }
  ck.residual(pullback);
  ck.require(pullback < tol(cfg, "identity"), "plane pullback at s = 1: " + fmt(pullback));

  // Valid fibers are LeBrun models: every curve is real and real-point free.
  std::size_t fibers = 0;
  for (double s : {1.0, 0.5, 0.1, -0.5}) {
    bool valid = true;
    for (const auto& m : mc.points) valid = valid && ellipsoid_contains(s, m);
    if (!valid) continue;
    ++fibers;
    for (const auto& k : member_fiber_model(mc, s).curves) {
      ck.require(k.is_swap_real() && real_point_free(k, RealStructure::Swap),
                 "fiber s = " + fmt(s) + " has a curve with a real point");
    }
  }
  ck.out.counts["valid_fibers_checked"] = fibers;

  const BiPoly central = central_fiber_pullback(mc);
  const BiPoly expect = uv_plus_one_power(mc.n);
  bool exact = true;
  for (int i = 0; i <= mc.n; ++i) {
    for (int j = 0; j <= mc.n; ++j) exact = exact && central.coeff(i, j) == expect.coeff(i, j);
  }
  ck.require(exact, "central fiber pullback is not (uv + 1)^n");
  ck.out.counts["central_fiber_exact"] = exact;
}

// ---------------------------------------------------------------------------------------------

void hitchin(const RunConfig& cfg, Checker& ck) {
  const auto mc = monopole_config(cfg);
  const HitchinModel hm = hitchin_limit(mc);
  double reality = 0.0;
  for (const auto& p : hm.polys) {
    reality = std::max(reality, reality_residual(p));
    const auto q = hitchin_sigma(p);
    reality = std::max({reality, std::abs(q.a - p.a), std::abs(q.b - p.b), std::abs(q.c - p.c)});
  }
  ck.require(reality == 0.0, "Hitchin sections are not exactly real: " + fmt(reality));
  ck.out.counts["reality_residual"] = reality;

  std::size_t not_involution = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Sampler rng(cfg.seed, "o2-involution", i);
    const QuadraticSection p{rng.uniform_box(2.0), rng.uniform_box(2.0), rng.uniform_box(2.0)};
    const auto q = hitchin_sigma(hitchin_sigma(p));
    if (q.a != p.a || q.b != p.b || q.c != p.c) ++not_involution;
  }
  ck.require(not_involution == 0, "O(2) reality rule is not an involution");

  double conj = 0.0;
  std::size_t tangent = 0;
  if (hm.n() >= 2) {
    for (const auto& x : hitchin_pairwise_intersections(hm)) {
      conj = std::max(conj, x.conjugacy_residual);
      tangent += x.tangent;
    }
  }
  const double random_conj = kernels::max_over(kernels::Exec::Parallel, std::min<std::size_t>(cfg.samples, 100), [&](std::size_t i) {
    Sampler rng(cfg.seed, "hitchin-pairs", i);
    HitchinModel pair;
    for (int k = 0; k < 2; ++k) {
      const Complex c = rng.uniform_box(1.0);
      pair.polys.push_back({-std::conj(c), rng.uniform(-1.0, 1.0), c});
    }
    return hitchin_pairwise_intersections(pair).front().conjugacy_residual;
  });
  conj = std::max(conj, random_conj);
  ck.residual(conj);
  ck.require(conj < tol(cfg, "conjugacy"), "Hitchin intersections not conjugate: " + fmt(conj));
  ck.out.counts["tangent_pairs"] = tangent;

  const double on_model = kernels::max_over(kernels::Exec::Parallel, cfg.samples, [&](std::size_t i) {
    Sampler rng(cfg.seed, "hitchin-points", i);
    const SpherePoint u = rng.sphere_point();
    const Complex z = rng.uniform_box(2.0);
    const Complex x = rng.log_uniform_polar(0.1, 10.0);
    const bool inv = !u.in_affine_chart();
    const Complex w = inv ? u.z1() : u.z0();
    Complex prod = 1.0;
    for (const auto& p : hm.polys) prod *= z - (inv ? p.at_inverse(w) : p(w));
    return hitchin_residual(hm, x, prod / x, z, u);
  });
  ck.residual(on_model);
  ck.require(on_model < tol(cfg, "identity"), "Hitchin model residual " + fmt(on_model));

  // Intersections of Z_s approach the Hitchin intersections as s -> 0.
  if (hm.n() >= 2) {
    const auto limit = hitchin_pairwise_intersections(hm);
    json conv = json::array();
    for (double s : {0.1, 0.01}) {
      bool valid = true;
      for (const auto& m : mc.points) valid = valid && ellipsoid_contains(s, m);
      if (!valid) continue;
      double worst = 0.0;
      const auto xs = pairwise_intersections(member_fiber_model(mc, s));
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const SpherePoint a = hitchin_coordinate(xs[k].first);
        const SpherePoint b = hitchin_coordinate(xs[k].second);
        const double straight = std::max(chordal_distance(a, limit[k].first),
                                         chordal_distance(b, limit[k].second));
        const double crossed = std::max(chordal_distance(a, limit[k].second),
                                        chordal_distance(b, limit[k].first));
        worst = std::max(worst, std::min(straight, crossed));
      }
      conv.push_back({{"s", s}, {"distance", worst}});
      ck.require(worst < tol(cfg, "convergence"), "no convergence at s = " + fmt(s));
    }
    ck.out.counts["convergence"] = conv;
  }
}

// ---------------------------------------------------------------------------------------------

void hyperbolic(const RunConfig& cfg, Checker& ck) {
  std::size_t disagree = 0;
  std::vector<char> bad(cfg.samples, 0);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Sampler rng(cfg.seed, "real-curves", i);
    const OneOneCurve k = OneOneCurve::real(rng.uniform(-2.0, 2.0), rng.uniform_box(1.5),
                                            rng.uniform(-2.0, 2.0));
    const bool closed = real_point_free(k, RealStructure::Swap);
    const auto g = kernels::swap_restriction_grid_min(kernels::Exec::Parallel, k, 200);
    const bool oracle = !(g.value < 1e-9);
    bad[i] = closed != oracle;
    // The same curve viewed in the antipodal convention.
    const OneOneCurve anti{-k.b, k.a, -k.d, k.c};
    bad[i] |= real_point_free(anti, RealStructure::AntipodalPair) != closed;
  }
  for (char b : bad) disagree += b;
  ck.require(disagree == 0, std::to_string(disagree) + " closed-form / oracle disagreements");
  ck.out.counts["oracle_curves"] = cfg.samples;
  ck.out.counts["oracle_disagreements"] = disagree;

  const std::size_t mismatch = kernels::count_if(kernels::Exec::Parallel, cfg.samples, [&](std::size_t i) {
    Sampler rng(cfg.seed, "ellipsoid", i);
    const double s = rng.uniform(0.05, 1.0);
    MonopolePoint m{rng.uniform(-1.0, 1.0), rng.uniform_box(1.0)};
    if (i % 2 == 0) {
      // Push the point to relative distance 1e-6 inside or outside the boundary.
      const double q = m.b * m.b + 4.0 * std::norm(m.c);
      const double target = (1.0 / (s * s)) * ((i % 4 == 0) ? 1.0 - 1e-6 : 1.0 + 1e-6);
      const double k = std::sqrt(target / q);
      m = {m.b * k, m.c * k};
    }
    return real_point_free(curve_from_monopole(m, s), RealStructure::Swap) !=
           ellipsoid_contains(s, m);
  });
  ck.require(mismatch == 0, std::to_string(mismatch) + " ellipsoid equivalence failures");
  ck.out.counts["ellipsoid_mismatches"] = mismatch;

  for (std::size_t i = 0; i < cfg.monopoles.size(); ++i) {
    const auto& m = cfg.monopoles[i];
    ck.require(real_point_free(curve_from_monopole(m, 1.0), RealStructure::Swap) ==
                   ellipsoid_contains(1.0, m),
               "monopole " + std::to_string(i) + ": equivalence fails");
  }
  for (std::size_t i = 0; i < cfg.curve_overrides.size(); ++i) {
    const auto& k = cfg.curve_overrides[i].curve;
    if (!k.is_swap_real()) {
      ck.fail("curve_overrides[" + std::to_string(i) + "] is not a real curve");
    } else {
      ck.require(real_point_free(k, RealStructure::Swap),
                 "curve_overrides[" + std::to_string(i) + "] has a real point");
    }
  }
  ck.require(real_point_free({0.0, 1.0, -1.0, 0.0}, RealStructure::AntipodalPair),
             "u - v has a real point");
}

}  // namespace

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  SuiteResult out;
  out.name = name;
  Checker ck{out};
  const auto start = std::chrono::steady_clock::now();
  try {
    if (name == "identities") {
      identities(cfg, ck);
    } else if (name == "twistor-lines") {
      twistor_lines_suite(cfg, ck);
    } else if (name == "singularities") {
      singularities(cfg, ck);
    } else if (name == "degeneration") {
      degeneration(cfg, ck);
    } else if (name == "hitchin") {
      hitchin(cfg, ck);
    } else if (name == "hyperbolic") {
      hyperbolic(cfg, ck);
    } else {
      ck.fail("unknown suite");
    }
  } catch (const std::exception& e) {
    ck.fail(std::string("aborted: ") + e.what());
  }
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

json run_suites(const RunConfig& cfg) {
  json report;
  report["version"] = kVersion;
  report["seed"] = cfg.seed;
  report["samples"] = cfg.samples;
  report["config_digest"] = config_digest(cfg);
  report["suites"] = json::array();
  bool pass = true;
  for (const auto& name : cfg.suites) {
    const SuiteResult r = run_suite(name, cfg);
    pass = pass && r.pass;
    report["suites"].push_back({{"name", r.name},
                                {"status", r.pass ? "PASS" : "FAIL"},
                                {"max_residual", r.max_residual},
                                {"counts", r.counts},
                                {"diagnostics", r.diagnostics},
                                {"elapsed_ms", r.elapsed_ms}});
  }
  report["status"] = pass ? "PASS" : "FAIL";
  return report;
}

}  // namespace twistor::cli
