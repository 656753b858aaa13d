#include "twistor/conic_bundle.hpp"

#include <algorithm>
#include <cmath>

#include "twistor/errors.hpp"
#include "twistor/kernels.hpp"
#include "twistor/sampling.hpp"

namespace twistor {

FiberBidegrees ProjectiveModel::bidegrees() const {
  if (x_bundle == XBundle::Standard) return {n - 1, 1, 1, n - 1};
  return {1, n - 1, n - 1, 1};
}

Complex ProjectiveModel::discriminant(const std::array<Complex, 2>& u,
                                      const std::array<Complex, 2>& v) const {
  Complex g = 1.0;
  for (const auto& k : curves) g *= k.eval(u, v);
  return g;
}

Complex ProjectiveModel::normalized_discriminant(const QPoint& q) const {
  Complex g = 1.0;
  for (const auto& k : curves) g *= k.normalized().eval(q);
  return g;
}

ProjectiveModel make_model(std::vector<OneOneCurve> curves, XBundle x_bundle) {
  if (curves.empty()) throw DomainError("make_model: need n >= 1 curves");
  for (const auto& k : curves) {
    if (k.scale() == 0.0) throw DegenerateInputError("make_model: zero curve");
  }
  ProjectiveModel m;
  m.n = static_cast<int>(curves.size());
  m.curves = std::move(curves);
  m.x_bundle = x_bundle;
  return m;
}

FiberPoint::FiberPoint(const QPoint& base, const std::array<Complex, 3>& fiber) : base_(base) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!std::isfinite(fiber[i].real()) || !std::isfinite(fiber[i].imag())) {
      throw DegenerateInputError("FiberPoint: non-finite fiber coordinate");
    }
    if (std::abs(fiber[i]) > std::abs(fiber[k])) k = i;
  }
  if (fiber[k] == Complex(0.0)) throw DegenerateInputError("FiberPoint: (0 : 0 : 0)");
  for (std::size_t i = 0; i < 3; ++i) fiber_[i] = (i == k) ? Complex(1.0) : fiber[i] / fiber[k];
}

namespace {

// rep = lambda * canonical(rep); the canonical representative has an exact 1 entry.
Complex rep_scale(const std::array<Complex, 2>& rep, const SpherePoint& canon) {
  return canon.z1() == Complex(1.0) ? rep[1] : rep[0];
}

Complex ipow(Complex z, int k) {
  Complex out = 1.0;
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

// Factor picked up by (x, y) when both base representatives are multiplied by (lu, lv).
std::array<Complex, 3> rescale(const std::array<Complex, 3>& f, Complex lu, Complex lv,
                               const FiberBidegrees& deg) {
  return {f[0] * ipow(lu, deg.xu) * ipow(lv, deg.xv), f[1] * ipow(lu, deg.yu) * ipow(lv, deg.yv),
          f[2]};
}

}  // namespace

FiberPoint FiberPoint::from_reps(const std::array<Complex, 2>& u_rep,
                                 const std::array<Complex, 2>& v_rep,
                                 const std::array<Complex, 3>& fiber, const FiberBidegrees& deg) {
  const SpherePoint u(u_rep[0], u_rep[1]);
  const SpherePoint v(v_rep[0], v_rep[1]);
  const Complex lu = 1.0 / rep_scale(u_rep, u);
  const Complex lv = 1.0 / rep_scale(v_rep, v);
  return FiberPoint({u, v}, rescale(fiber, lu, lv, deg));
}

std::array<Complex, 3> fiber_relative_to(const FiberPoint& p, const QPoint& ref,
                                         const FiberBidegrees& deg) {
  const Complex mu = rep_ratio(p.base().u, ref.u);
  const Complex mv = rep_ratio(p.base().v, ref.v);
  if (mu == Complex(0.0) || mv == Complex(0.0)) {
    throw DomainError("fiber_relative_to: reference base point is far from the point");
  }
  return rescale(p.fiber(), mu, mv, deg);
}

double point_distance(const FiberPoint& p, const FiberPoint& q, const FiberBidegrees& deg) {
  const double base = chordal_distance(p.base(), q.base());
  if (base > 0.5) return base;
  const auto qf = fiber_relative_to(q, p.base(), deg);
  return std::max(base, fs_distance(p.fiber(), qf));
}

Chart chart_of(const QPoint& q) { return {!q.u.in_affine_chart(), !q.v.in_affine_chart()}; }

ChartCoords to_chart(const FiberPoint& p, Chart chart, const FiberBidegrees& deg) {
  const auto& u = p.base().u;
  const auto& v = p.base().v;
  const Complex uden = chart.u_inverted ? u.z0() : u.z1();
  const Complex vden = chart.v_inverted ? v.z0() : v.z1();
  if (uden == Complex(0.0) || vden == Complex(0.0)) {
    throw DomainError("to_chart: base point is not in the requested chart");
  }
  const auto f = rescale(p.fiber(), 1.0 / uden, 1.0 / vden, deg);
  ChartCoords c;
  c.u = (chart.u_inverted ? u.z1() : u.z0()) / uden;
  c.v = (chart.v_inverted ? v.z1() : v.z0()) / vden;
  c.x = f[0];
  c.y = f[1];
  c.z = f[2];
  return c;
}

OneOneCurve curve_in_chart(const OneOneCurve& k, Chart chart) {
  if (!chart.u_inverted && !chart.v_inverted) return k;
  if (chart.u_inverted && !chart.v_inverted) return {k.c, k.d, k.a, k.b};
  if (!chart.u_inverted) return {k.b, k.a, k.d, k.c};
  return {k.d, k.c, k.b, k.a};
}

namespace {

// |xy - G z^2| against |xy| + S |z|^2, where S bounds |G| by the absolute values of the terms of
// each curve. S transforms like |G| between charts, and it keeps the ratio small where both
// sides vanish (G rounds to ~1e-17 rather than 0 there).
double relative_residual(Complex xy, Complex g, double bound, Complex z) {
  const double den = std::abs(xy) + bound * std::norm(z);
  return den == 0.0 ? 0.0 : std::abs(xy - g * z * z) / den;
}

double term_bound(const OneOneCurve& k, Complex u0, Complex u1, Complex v0, Complex v1) {
  return std::abs(k.a) * std::abs(u0 * v0) + std::abs(k.b) * std::abs(u0 * v1) +
         std::abs(k.c) * std::abs(u1 * v0) + std::abs(k.d) * std::abs(u1 * v1);
}

}  // namespace

double defining_residual(const ProjectiveModel& model, const FiberPoint& p) {
  const auto u = p.base().u.rep();
  const auto v = p.base().v.rep();
  double bound = 1.0;
  for (const auto& k : model.curves) bound *= term_bound(k, u[0], u[1], v[0], v[1]);
  return relative_residual(p.x() * p.y(), model.discriminant(u, v), bound, p.z());
}

double defining_residual(const ProjectiveModel& model, const ChartCoords& c, Chart chart) {
  Complex g = 1.0;
  double bound = 1.0;
  for (const auto& k : model.curves) {
    const auto kc = curve_in_chart(k, chart);
    g *= kc.a * c.u * c.v + kc.b * c.u + kc.c * c.v + kc.d;
    bound *= term_bound(kc, c.u, 1.0, c.v, 1.0);
  }
  return relative_residual(c.x * c.y, g, bound, c.z);
}

FiberType fiber_type(const ProjectiveModel& model, const QPoint& q, double tol) {
  return std::abs(model.normalized_discriminant(q)) <= tol ? FiberType::LinePair
                                                           : FiberType::SmoothConic;
}

namespace {

bool proportional(const OneOneCurve& p, const OneOneCurve& q, double tol) {
  const std::array<Complex, 4> a{p.a, p.b, p.c, p.d};
  const std::array<Complex, 4> b{q.a, q.b, q.c, q.d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(a[i] * b[j] - a[j] * b[i]) > tol) return false;
    }
  }
  return true;
}

// The v root over a given u: P = L1(U) V0 + L2(U) V1, so V = [-L2 : L1].
SpherePoint v_over(const OneOneCurve& p, const OneOneCurve& q, const SpherePoint& u) {
  const Complex l1p = p.a * u.z0() + p.c * u.z1();
  const Complex l2p = p.b * u.z0() + p.d * u.z1();
  const Complex l1q = q.a * u.z0() + q.c * u.z1();
  const Complex l2q = q.b * u.z0() + q.d * u.z1();
  if (std::hypot(std::abs(l1p), std::abs(l2p)) >= std::hypot(std::abs(l1q), std::abs(l2q))) {
    return SpherePoint(-l2p, l1p);
  }
  return SpherePoint(-l2q, l1q);
}

}  // namespace

Intersection intersect_curves(const OneOneCurve& p_in, const OneOneCurve& q_in, int i, int j) {
  const auto p = p_in.normalized();
  const auto q = q_in.normalized();
  if (proportional(p, q, 1e-12)) {
    throw DegenerateInputError("intersect_curves: curves " + std::to_string(i) + " and " +
                               std::to_string(j) + " are proportional");
  }
  // L1_p L2_q - L2_p L1_q as a binary quadratic in (U0, U1).
  const Complex qa = p.a * q.b - p.b * q.a;
  const Complex qb = p.a * q.d + p.c * q.b - p.b * q.c - p.d * q.a;
  const Complex qc = p.c * q.d - p.d * q.c;
  if (std::max({std::abs(qa), std::abs(qb), std::abs(qc)}) <= 1e-12) {
    throw DegenerateInputError("intersect_curves: curves " + std::to_string(i) + " and " +
                               std::to_string(j) + " share a component");
  }
  const auto roots = solve_binary_quadratic(qa, qb, qc);
  Intersection out;
  out.i = i;
  out.j = j;
  out.first = {roots.first, v_over(p, q, roots.first)};
  out.second = {roots.second, v_over(p, q, roots.second)};
  out.tangent = roots.double_root;
  return out;
}

std::vector<Intersection> pairwise_intersections(const ProjectiveModel& model) {
  std::vector<Intersection> out;
  for (int i = 0; i < model.n; ++i) {
    for (int j = i + 1; j < model.n; ++j) {
      out.push_back(intersect_curves(model.curves[i], model.curves[j], i, j));
    }
  }
  return out;
}

bool reducible_crossing(const OneOneCurve& curve, QPoint& out, double tol) {
  const auto k = curve.normalized();
  if (std::abs(k.a * k.d - k.b * k.c) > tol) return false;
  // P = (U0, U1) M (V0, V1)^T with M = [[a, b], [c, d]] = p q^T.
  const bool col0 = std::hypot(std::abs(k.a), std::abs(k.c)) >= std::hypot(std::abs(k.b), std::abs(k.d));
  const Complex p0 = col0 ? k.a : k.b;
  const Complex p1 = col0 ? k.c : k.d;
  const bool row0 = std::hypot(std::abs(k.a), std::abs(k.b)) >= std::hypot(std::abs(k.c), std::abs(k.d));
  const Complex q0 = row0 ? k.a : k.c;
  const Complex q1 = row0 ? k.b : k.d;
  out = {SpherePoint(-p1, p0), SpherePoint(-q1, q0)};
  return true;
}

const char* to_string(Singularity s) {
  switch (s) {
    case Singularity::OrdinaryDoublePoint:
      return "ODP";
    case Singularity::Degenerate:
      return "DEGENERATE";
    case Singularity::Nonsingular:
      return "NONSINGULAR";
  }
  return "?";
}

BiPoly local_discriminant(const ProjectiveModel& model, Chart chart) {
  BiPoly g = BiPoly::constant(1.0);
  for (const auto& k : model.curves) g = g * curve_in_chart(k.normalized(), chart).poly();
  return g;
}

namespace {

Complex chart_coord(const SpherePoint& p, bool inverted) {
  return inverted ? p.z1() / p.z0() : p.z0() / p.z1();
}

}  // namespace

Singularity classify_singularity(const ProjectiveModel& model, const QPoint& base,
                                 double residual_tol, double hessian_tol) {
  const Chart chart = chart_of(base);
  const BiPoly g = local_discriminant(model, chart);
  const Complex u = chart_coord(base.u, chart.u_inverted);
  const Complex v = chart_coord(base.v, chart.v_inverted);
  const double worst =
      std::max({std::abs(g(u, v)), std::abs(g.d_du()(u, v)), std::abs(g.d_dv()(u, v))});
  if (worst > residual_tol) return Singularity::Nonsingular;
  const auto h = g.hessian(u, v);
  const Complex det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
  // |det| / |H|_F^2 only sees the shape of H: it is 1/2 for uv and 0 at a tangency, however
  // close the curves are to each other (s -> 0 in the degeneration)
  const double frob = std::norm(h[0][0]) + std::norm(h[0][1]) + std::norm(h[1][0]) + std::norm(h[1][1]);
  if (frob == 0.0) return Singularity::Degenerate;
  return std::abs(det) / frob > hessian_tol ? Singularity::OrdinaryDoublePoint
                                            : Singularity::Degenerate;
}

std::vector<SingularPointReport> singular_points(const ProjectiveModel& model) {
  std::vector<SingularPointReport> out;
  auto add = [&](const QPoint& q, int i, int j) {
    for (const auto& r : out) {
      if (chordal_distance(r.base, q) < 1e-9) return;
    }
    SingularPointReport r;
    r.base = q;
    r.curve_indices = {i, j};
    r.classification = classify_singularity(model, q);
    out.push_back(r);
  };
  for (const auto& x : pairwise_intersections(model)) {
    add(x.first, x.i, x.j);
    add(x.second, x.i, x.j);
  }
  for (int i = 0; i < model.n; ++i) {
    QPoint q;
    if (reducible_crossing(model.curves[i], q)) add(q, i, i);
  }
  return out;
}

FiberPoint cstar_act(Complex s, const FiberPoint& p) {
  if (s == Complex(0.0)) throw DomainError("cstar_act: s = 0 is not in C*");
  return FiberPoint(p.base(), {s * p.x(), p.y() / s, p.z()});
}

ProjectiveModel degenerate_first_curve(const ProjectiveModel& model) {
  const OneOneCurve& k = model.curves.at(0);
  if (std::abs(k.a - 1.0) > 1e-14 || std::abs(k.b) > 1e-14 || std::abs(k.c) > 1e-14) {
    throw DomainError("degenerate_first_curve: first curve is not of the form uv + lambda");
  }
  ProjectiveModel out = model;
  out.curves[0] = {1.0, 0.0, 0.0, 0.0};
  return out;
}

namespace {

// mu with P(sigma(U, V)) = mu conj P(U, V). In both cases P(sigma) = conj Q(U, V) for a
// coefficient tuple Q, and reality means Q = conj(mu) P.
Complex reality_phase(const OneOneCurve& curve, RealStructure conv) {
  const auto k = curve.normalized();
  std::array<Complex, 4> p{k.a, k.b, k.c, k.d};
  std::array<Complex, 4> q;
  if (conv == RealStructure::Swap) {
    q = {std::conj(k.a), std::conj(k.c), std::conj(k.b), std::conj(k.d)};
  } else if (conv == RealStructure::AntipodalPair) {
    q = {std::conj(k.d), -std::conj(k.b), -std::conj(k.c), std::conj(k.a)};
  } else {
    throw DomainError("real_structure_lift: CP3_FAMILY does not act on a single model");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (std::abs(p[i]) > std::abs(p[best])) best = i;
  }
  const Complex mu_bar = q[best] / p[best];
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(q[i] - mu_bar * p[i]) > 1e-10) {
      throw DomainError(std::string("real_structure_lift: curve is not real for ") +
                        to_string(conv));
    }
  }
  return std::conj(mu_bar);
}

Complex lift_phase(const ProjectiveModel& model, RealStructure conv) {
  Complex kappa = 1.0;
  for (const auto& k : model.curves) kappa *= reality_phase(k, conv);
  return kappa;
}

// The lift is (alpha conj y, beta conj x, conj z) with alpha beta = kappa, so that xy = G z^2
// is preserved. Being an involution forces alpha conj(beta) = 1 for Swap, and
// alpha conj(beta) = (-1)^n for AntipodalPair, whose representative map squares to -1.
FiberPoint lift_with_phase(const ProjectiveModel& model, RealStructure conv, Complex kappa,
                           const FiberPoint& p) {
  const auto U = p.base().u.rep();
  const auto V = p.base().v.rep();
  const auto deg = model.bidegrees();
  if (conv == RealStructure::Swap) {
    const Complex alpha = std::sqrt(kappa);
    return FiberPoint::from_reps({std::conj(V[0]), std::conj(V[1])},
                                 {std::conj(U[0]), std::conj(U[1])},
                                 {alpha * std::conj(p.y()), alpha * std::conj(p.x()), std::conj(p.z())},
                                 deg);
  }
  const Complex alpha = std::sqrt(model.n % 2 == 0 ? kappa : -kappa);
  return FiberPoint::from_reps({-std::conj(V[1]), std::conj(V[0])},
                               {-std::conj(U[1]), std::conj(U[0])},
                               {alpha * std::conj(p.y()), kappa / alpha * std::conj(p.x()), std::conj(p.z())},
                               deg);
}

}  // namespace

FiberPoint real_structure_lift(const ProjectiveModel& model, RealStructure conv,
                               const FiberPoint& p) {
  return lift_with_phase(model, conv, lift_phase(model, conv), p);
}

FiberPoint point_on_model(const ProjectiveModel& model, const QPoint& q, Complex x) {
  if (x == Complex(0.0)) throw DomainError("point_on_model: x must be nonzero");
  const Complex g = model.discriminant(q.u.rep(), q.v.rep());
  return FiberPoint(q, {x, g / x, 1.0});
}

double verify_real_invariance(const ProjectiveModel& model, RealStructure conv,
                              std::size_t samples, std::uint64_t seed) {
  const Complex kappa = lift_phase(model, conv);
  return kernels::max_over(kernels::Exec::Parallel, samples, [&](std::size_t i) {
    Sampler rng(seed, "real-invariance", i);
    const QPoint q = rng.q_point();
    const Complex x = rng.log_uniform_polar(0.1, 10.0);
    const FiberPoint p = point_on_model(model, q, x);
    const FiberPoint image = lift_with_phase(model, conv, kappa, p);
    return std::max(defining_residual(model, p), defining_residual(model, image));
  });
}

}  // namespace twistor
