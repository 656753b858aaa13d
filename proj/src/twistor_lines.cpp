#include "twistor/twistor_lines.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "twistor/errors.hpp"
#include "twistor/kernels.hpp"
#include "twistor/sampling.hpp"

namespace twistor {

CoincidentModel::CoincidentModel(int n_) : n(n_) {
  if (n < 1) throw DomainError("CoincidentModel: n must be >= 1");
}

ProjectiveModel CoincidentModel::model() const {
  return make_model(std::vector<OneOneCurve>(n, OneOneCurve{0.0, 1.0, -1.0, 0.0}),
                    XBundle::Transposed);
}

void TwistorLineParams::validate() const {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("TwistorLineParams: r must lie in (0, 1)");
  if (!(std::abs(std::abs(c) - 1.0) < 1e-10)) {
    throw DomainError("TwistorLineParams: |c| must be 1");
  }
}

CurveReps minitwistor_reps(const SpherePoint& d, double r, const SpherePoint& t) {
  const Complex t0 = t.z0();
  const Complex t1 = t.z1();
  if (d.is_infinity()) return {{t1, r * t0}, {r * t1, t0}};
  const Complex dv = d.value();
  const Complex db = std::conj(dv);
  return {{dv * t1 - r * t0, t1 + r * db * t0}, {r * dv * t1 - t0, r * t1 + db * t0}};
}

QPoint minitwistor_curve_eval(const SpherePoint& d, double r, const SpherePoint& t) {
  const auto reps = minitwistor_reps(d, r, t);
  return {SpherePoint(reps.u[0], reps.u[1]), SpherePoint(reps.v[0], reps.v[1])};
}

OneOneCurve minitwistor_curve(const SpherePoint& d, double r) {
  if (d.is_infinity()) return {0.0, -r * r, 1.0, 0.0};
  const Complex dv = d.value();
  const double m2 = std::norm(dv);
  return {std::conj(dv) * (1.0 - r * r), 1.0 + r * r * m2, -(m2 + r * r), -dv * (1.0 - r * r)};
}

namespace {

double line_k(int n, const SpherePoint& d, double r) {
  const double base = d.is_infinity() ? 1.0 - r * r : (1.0 + std::norm(d.value())) * (1.0 - r * r);
  return std::pow(base, 0.5 * n);
}

Complex cpow(Complex z, int k) {
  Complex out = 1.0;
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

}  // namespace

FiberPoint line_eval(const CoincidentModel& m, const TwistorLineParams& L, const SpherePoint& t) {
  L.validate();
  const auto reps = minitwistor_reps(L.d, L.r, t);
  const double k = line_k(m.n, L.d, L.r);
  const Complex x = L.c * k * cpow(t.z0(), m.n);
  const Complex y = k * cpow(t.z1(), m.n) / L.c;
  return FiberPoint::from_reps(reps.u, reps.v, {x, y, 1.0}, m.bidegrees());
}

SpherePoint curve_parameter(const SpherePoint& d, double r, const QPoint& base) {
  const Complex u0 = base.u.z0(), u1 = base.u.z1();
  const Complex v0 = base.v.z0(), v1 = base.v.z1();
  SpherePoint from_u;
  SpherePoint from_v;
  if (d.is_infinity()) {
    from_u = SpherePoint(u1, r * u0);
    from_v = SpherePoint(r * v1, v0);
  } else {
    const Complex dv = d.value();
    const Complex db = std::conj(dv);
    from_u = SpherePoint(dv * u1 - u0, r * (u1 + db * u0));
    from_v = SpherePoint(r * (dv * v1 - v0), v1 + db * v0);
  }
  const double eu = chordal_distance(minitwistor_curve_eval(d, r, from_u), base);
  const double ev = chordal_distance(minitwistor_curve_eval(d, r, from_v), base);
  return eu <= ev ? from_u : from_v;
}

double f_r(int n, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("f_r: r must lie in (0, 1)");
  return std::pow(1.0 - r * r, 0.5 * n) / r;
}

double g_a(int n, double vmod, double a) {
  if (!(a > -1.0 && a < 0.0)) throw DomainError("g_a: a must lie in (-1, 0)");
  return -a * std::pow(vmod * vmod - a, n - 1) / (1.0 + a);
}

namespace {

constexpr double kBisectEps = 1e-12;
constexpr double kBisectTol = 1e-13;
constexpr int kBisectMaxIter = 200;

// Root of a decreasing function h on (lo, hi).
template <class H>
double bisect_decreasing(double lo, double hi, H&& h, const char* what) {
  const double hlo = h(lo);
  const double hhi = h(hi);
  if (!(hlo > 0.0 && hhi < 0.0)) {
    std::ostringstream os;
    os << "solve_line_through_point: " << what << " bisection does not bracket (h(" << lo
       << ") = " << hlo << ", h(" << hi << ") = " << hhi << ")";
    throw ConsistencyError(os.str());
  }
  for (int it = 0; it < kBisectMaxIter && hi - lo > kBisectTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (h(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

LineSolution solve_line_through_point(const CoincidentModel& m, const FiberPoint& p) {
  const ProjectiveModel model = m.model();
  const FiberBidegrees deg = m.bidegrees();
  const QPoint& base = p.base();
  const auto& f = p.fiber();

  if (defining_residual(model, p) >= 1e-9) {
    throw NoLineError("not-on-model", "solve_line_through_point: point is not on X_0");
  }
  if (fs_distance(f, {0.0, 1.0, 0.0}) <= 1e-6) {
    throw NoLineError("E", "solve_line_through_point: point lies on the section E");
  }
  if (fs_distance(f, {1.0, 0.0, 0.0}) <= 1e-6) {
    throw NoLineError("E-bar", "solve_line_through_point: point lies on the section E-bar");
  }
  if (chordal_distance(base.u, base.v) <= 1e-6 && fs_distance(f, {0.0, 0.0, 1.0}) <= 1e-6) {
    throw NoLineError("L-infinity", "solve_line_through_point: point lies on L_infinity");
  }
  if (chordal_distance(base.v, antipode(base.u)) <= 1e-6) {
    throw NoLineError("real-base",
                      "solve_line_through_point: base point is fixed by the real structure");
  }

  const Complex xi_t = f[0] / f[2];
  const Complex eta_t = f[1] / f[2];

  // Fiber of the c = 1 line over the curve C(d, r) at the target base, in the target's
  // representatives.
  auto probe = [&](const SpherePoint& d, double r) {
    const TwistorLineParams L{d, r, 1.0};
    const SpherePoint t = curve_parameter(d, r, base);
    const auto rel = fiber_relative_to(line_eval(m, L, t), base, deg);
    return std::array<Complex, 2>{rel[0] / rel[2], rel[1] / rel[2]};
  };

  const SU2Element g = su2_reduce_to_axis(base.u);
  const SU2Element ginv = g.inverse();
  const SpherePoint vp = g.apply(base.v);

  LineSolution out;
  SpherePoint d;
  double r = 0.0;
  Complex c = 1.0;
  if (!vp.is_infinity() && std::abs(vp.value()) <= 1e-9) {
    if (std::abs(xi_t) <= std::abs(eta_t)) {
      // xi = 0 side: the line through (0, 0) with d' = 0 and |eta| = f(r).
      d = ginv.apply(SpherePoint::affine(0.0));
      const double target = std::log(std::abs(eta_t));
      r = bisect_decreasing(
          kBisectEps, 1.0 - kBisectEps,
          [&](double rr) { return std::log(std::abs(probe(d, rr)[1])) - target; }, "r (d=0)");
      c = probe(d, r)[1] / eta_t;
      out.branch = "d=0";
    } else {
      d = ginv.apply(SpherePoint::infinity());
      const double target = std::log(std::abs(xi_t));
      r = bisect_decreasing(
          kBisectEps, 1.0 - kBisectEps,
          [&](double rr) { return std::log(std::abs(probe(d, rr)[0])) - target; }, "r (d=inf)");
      c = xi_t / probe(d, r)[0];
      out.branch = "d=inf";
    }
  } else {
    // The lines through (0, v') are C(a / conj v', r(a)) with -1 < a < 0, and |xi| there is
    // monotone in a; transport back by g^-1 and match |xi| at the original point.
    const Complex v = vp.value();
    const double vmod2 = std::norm(v);
    auto curve_of = [&](double a, SpherePoint& dd, double& rr) {
      dd = ginv.apply(SpherePoint::affine(a / std::conj(v)));
      rr = std::sqrt(a * (1.0 + a) / (a - vmod2));
    };
    const double target = std::log(std::abs(xi_t));
    const double a = bisect_decreasing(
        -1.0 + kBisectEps, -kBisectEps,
        [&](double aa) {
          SpherePoint dd;
          double rr = 0.0;
          curve_of(aa, dd, rr);
          return std::log(std::abs(probe(dd, rr)[0])) - target;
        },
        "a");
    curve_of(a, d, r);
    c = xi_t / probe(d, r)[0];
    out.branch = "generic";
  }

  if (!(std::abs(std::abs(c) - 1.0) < 1e-8)) {
    std::ostringstream os;
    os << "solve_line_through_point: recovered |c| = " << std::abs(c) << " (branch "
       << out.branch << ")";
    throw ConsistencyError(os.str());
  }
  out.c_modulus_error = std::abs(std::abs(c) - 1.0);
  out.params = {d, r, c / std::abs(c)};
  const SpherePoint t = curve_parameter(d, r, base);
  double residual = point_distance(p, line_eval(m, out.params, t), deg);
  for (const auto& s : sphere_lattice(8)) {
    residual = std::max(residual, defining_residual(model, line_eval(m, out.params, s)));
  }
  out.residual = residual;
  return out;
}

std::vector<SpherePoint> sphere_lattice(std::size_t count) {
  std::vector<SpherePoint> out;
  out.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < count; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / static_cast<double>(count);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(k);
    out.emplace_back(Complex(rho * std::cos(phi), rho * std::sin(phi)), 1.0 - z);
  }
  return out;
}

std::vector<FiberPoint> sample_line(const CoincidentModel& m, const TwistorLineParams& L,
                                    std::size_t count) {
  std::vector<FiberPoint> out;
  out.reserve(count);
  for (const auto& t : sphere_lattice(count)) out.push_back(line_eval(m, L, t));
  return out;
}

double distance_to_line(const CoincidentModel& m, const TwistorLineParams& L,
                        const FiberPoint& p) {
  const SpherePoint t = curve_parameter(L.d, L.r, p.base());
  return point_distance(p, line_eval(m, L, t), m.bidegrees());
}

double line_hausdorff(const CoincidentModel& m, const TwistorLineParams& a,
                      const TwistorLineParams& b, std::size_t count) {
  double worst = 0.0;
  for (const auto& p : sample_line(m, a, count)) worst = std::max(worst, distance_to_line(m, b, p));
  for (const auto& p : sample_line(m, b, count)) worst = std::max(worst, distance_to_line(m, a, p));
  return worst;
}

namespace {

// Affine coordinate of t in whichever chart keeps it in the closed unit disk.
struct ChartParam {
  Complex w;
  bool inverted;

  SpherePoint point() const { return inverted ? SpherePoint(1.0, w) : SpherePoint(w, 1.0); }
};

ChartParam to_param(const SpherePoint& t) {
  if (t.in_affine_chart()) return {t.z0(), false};
  return {t.z1(), true};
}

}  // namespace

double foliation_disjointness(const CoincidentModel& m, const TwistorLineParams& a,
                              const TwistorLineParams& b, std::size_t samples) {
  const auto deg = m.bidegrees();
  const auto ts = sphere_lattice(samples);
  std::vector<FiberPoint> pa;
  std::vector<FiberPoint> pb;
  for (const auto& t : ts) {
    pa.push_back(line_eval(m, a, t));
    pb.push_back(line_eval(m, b, t));
  }
  const auto best = kernels::pairwise_min_distance(kernels::Exec::Parallel, pa, pb, deg);
  if (best.value == 0.0) return 0.0;

  ChartParam s = to_param(ts[best.i]);
  ChartParam t = to_param(ts[best.j]);
  auto objective = [&](const ChartParam& x, const ChartParam& y) {
    return point_distance(line_eval(m, a, x.point()), line_eval(m, b, y.point()), deg);
  };
  double value = best.value;
  double step = 0.05;
  const std::array<Complex, 4> dirs{Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)};
  for (int iter = 0; iter < 2000 && step > 1e-12; ++iter) {
    bool improved = false;
    for (int which = 0; which < 2 && !improved; ++which) {
      for (const auto& dir : dirs) {
        ChartParam s2 = s;
        ChartParam t2 = t;
        (which == 0 ? s2 : t2).w += step * dir;
        const double v2 = objective(s2, t2);
        if (v2 < value) {
          value = v2;
          s = s2;
          t = t2;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return value;
}

double distance_to_l_infinity(const FiberPoint& p) {
  return std::max(0.5 * chordal_distance(p.base().u, p.base().v),
                  fs_distance(p.fiber(), {0.0, 0.0, 1.0}));
}

double line_reality_defect(const CoincidentModel& m, const TwistorLineParams& L,
                           const SpherePoint& t) {
  const auto image =
      real_structure_lift(m.model(), RealStructure::AntipodalPair, line_eval(m, L, t));
  const SpherePoint t_conj(-std::conj(t.z1()), std::conj(t.z0()));
  return point_distance(image, line_eval(m, L, t_conj), m.bidegrees());
}

double real_point_distance(const CoincidentModel& m, const FiberPoint& p) {
  const auto image = real_structure_lift(m.model(), RealStructure::AntipodalPair, p);
  return point_distance(p, image, m.bidegrees());
}

double no_real_point_check(const CoincidentModel& m, std::size_t samples, std::uint64_t seed) {
  const ProjectiveModel model = m.model();
  return kernels::min_over(kernels::Exec::Parallel, samples, [&](std::size_t i) {
    Sampler rng(seed, "no-real-point", i);
    const SpherePoint u = rng.sphere_point();
    const QPoint q{u, antipode(u)};
    const FiberPoint p = point_on_model(model, q, rng.log_uniform_polar(0.1, 10.0));
    return real_point_distance(m, p);
  });
}

TwistorLineParams random_line_params(std::uint64_t seed, std::uint64_t index) {
  Sampler rng(seed, "line-params", index);
  TwistorLineParams L;
  L.d = rng.sphere_point();
  L.r = rng.uniform(0.05, 0.9);
  L.c = rng.unit_phase();
  return L;
}

}  // namespace twistor
