#include "twistor/degeneration.hpp"

#include <cmath>
#include <string>

#include "twistor/errors.hpp"
#include "twistor/sampling.hpp"

namespace twistor {

double quadric_residual(const CP3Point& p, Complex s) {
  return std::abs(s * s * p[0] * p[0] - p[1] * p[1] - p[2] * p[3]);
}

QuadricFamilyPoint::QuadricFamilyPoint(const CP3Point& p_, Complex s_) : p(p_), s(s_) {
  if (!(quadric_residual(p, s) < 1e-9)) {
    throw DomainError("QuadricFamilyPoint: point is not on the quadric Q_s");
  }
}

QuadricFamilyPoint phi_inverse(const QPoint& q, Complex s) {
  if (s == Complex(0.0)) throw DomainError("phi_inverse: s = 0 (the fiber over 0 is a cone)");
  const Complex u0 = q.u.z0(), u1 = q.u.z1();
  const Complex v0 = q.v.z0(), v1 = q.v.z1();
  const CP3Point p({u0 * v0 + u1 * v1, s * (u0 * v0 - u1 * v1), 2.0 * s * u0 * v1,
                    2.0 * s * u1 * v0});
  return {p, s};
}

namespace {

SpherePoint larger_pair(Complex a0, Complex a1, Complex b0, Complex b1) {
  if (std::hypot(std::abs(a0), std::abs(a1)) >= std::hypot(std::abs(b0), std::abs(b1))) {
    return SpherePoint(a0, a1);
  }
  return SpherePoint(b0, b1);
}

}  // namespace

QPoint phi(const QuadricFamilyPoint& qp) {
  const Complex s = qp.s;
  if (s == Complex(0.0)) throw DomainError("phi: s = 0");
  const auto& x = qp.p;
  const Complex minus = s * x[0] - x[1];
  const Complex plus = s * x[0] + x[1];
  return {larger_pair(x[2], minus, plus, x[3]), larger_pair(x[3], minus, plus, x[2])};
}

DivisorCheckReport divisor_restriction_check(double s, std::size_t samples, std::uint64_t seed) {
  if (s == 0.0) throw DomainError("divisor_restriction_check: s = 0");
  DivisorCheckReport rep;
  rep.s = s;
  std::vector<QPoint> d1;
  std::vector<QPoint> d2;
  for (std::size_t i = 0; i < samples; ++i) {
    Sampler rng(seed, "divisor", i);
    // parametrized by the free sphere coordinate [z0 : z1] = [2 s x0 : w], so the samples
    // cover the sphere for every s
    const SpherePoint z = (i == 0) ? SpherePoint::affine(0.0) : rng.sphere_point();
    const Complex x0 = z.z0();
    const Complex w = 2.0 * s * z.z1();
    const CP3Point p1({x0, s * x0, w, 0.0});
    const CP3Point p2({x0, s * x0, 0.0, w});
    d1.push_back(phi({p1, s}));
    d2.push_back(phi({p2, s}));
    const auto image = sigma_cp3(p1, s);
    const auto& y = image.first;
    const double scale = std::max(std::abs(y[0]), std::abs(y[1]));
    rep.sigma_exchange_residual =
        std::max({rep.sigma_exchange_residual, std::abs(y[2]),
                  std::abs(y[1] - image.second * y[0]) / std::max(scale, 1.0)});
  }
  auto spread = [](const std::vector<QPoint>& pts, bool first) {
    double worst = 0.0;
    for (const auto& p : pts) {
      worst = std::max(worst, first ? chordal_distance(p.u, pts.front().u)
                                    : chordal_distance(p.v, pts.front().v));
    }
    return worst;
  };
  rep.d1_u_spread = spread(d1, true);
  rep.d1_v_spread = spread(d1, false);
  rep.d2_u_spread = spread(d2, true);
  rep.d2_v_spread = spread(d2, false);
  rep.d1_u = d1.front().u;
  rep.d2_v = d2.front().v;
  // Class (1,0): a fiber of the first projection, so u is constant and v sweeps the sphere.
  rep.d1_class_10 = rep.d1_u_spread < 1e-12 && rep.d1_v_spread > 0.1;
  rep.d2_class_01 = rep.d2_v_spread < 1e-12 && rep.d2_u_spread > 0.1;
  return rep;
}

void MonopoleConfig::validate() const {
  if (n < 1) throw DomainError("MonopoleConfig: n must be >= 1");
  if (static_cast<std::size_t>(n) != points.size()) {
    throw DomainError("MonopoleConfig: n = " + std::to_string(n) + " but " +
                      std::to_string(points.size()) + " monopoles given");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& m = points[i];
    if (!std::isfinite(m.b) || !std::isfinite(m.c.real()) || !std::isfinite(m.c.imag())) {
      throw DomainError("MonopoleConfig: monopole " + std::to_string(i) + " is not finite");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const double dist = std::hypot(m.b - points[j].b, std::abs(m.c - points[j].c));
      if (dist <= 1e-9) {
        throw DegenerateInputError("MonopoleConfig: monopoles " + std::to_string(j) + " and " +
                                   std::to_string(i) + " coincide");
      }
    }
  }
}

MonopoleConfig make_config(std::vector<MonopolePoint> points) {
  MonopoleConfig cfg;
  cfg.n = static_cast<int>(points.size());
  cfg.points = std::move(points);
  cfg.validate();
  return cfg;
}

ProjectiveModel member_fiber_model(const MonopoleConfig& cfg, double s) {
  cfg.validate();
  if (s == 0.0 || !std::isfinite(s)) {
    throw DomainError("member_fiber_model: s must be a nonzero real (use hitchin_limit at 0)");
  }
  std::vector<OneOneCurve> curves;
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    if (!ellipsoid_contains(s, cfg.points[i])) {
      throw DomainError("member_fiber_model: monopole " + std::to_string(i) +
                        " lies outside the ellipsoid B(s) for s = " + std::to_string(s));
    }
    curves.push_back(curve_from_monopole(cfg.points[i], s));
  }
  return make_model(std::move(curves), XBundle::Standard);
}

double plane_pullback_residual(const MonopolePoint& m, double s, const QPoint& q) {
  const auto x = phi_inverse(q, s).p;
  // phi_inverse renormalizes; undo it against the raw bihomogeneous tuple.
  const Complex raw0 = q.u.z0() * q.v.z0() + q.u.z1() * q.v.z1();
  const Complex raw1 = s * (q.u.z0() * q.v.z0() - q.u.z1() * q.v.z1());
  const Complex scale = std::abs(raw0) >= std::abs(raw1) ? raw0 / x[0] : raw1 / x[1];
  const Complex lhs = plane_from_monopole(m)(x.coords()) * scale;
  const Complex rhs = curve_from_monopole(m, s).eval(q);
  const double den = std::max(std::abs(lhs), std::abs(rhs));
  return den == 0.0 ? 0.0 : std::abs(lhs - rhs) / den;
}

double reality_residual(const QuadraticSection& p) {
  return std::max(std::abs(p.a + std::conj(p.c)), std::abs(p.b.imag()));
}

QuadraticSection hitchin_sigma(const QuadraticSection& p) {
  return {-std::conj(p.c), std::conj(p.b), -std::conj(p.a)};
}

void HitchinModel::validate() const {
  if (polys.empty()) throw DomainError("HitchinModel: need at least one section");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (reality_residual(polys[i]) > 1e-12) {
      throw DomainError("HitchinModel: section " + std::to_string(i) + " is not real");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const double diff = std::max({std::abs(polys[i].a - polys[j].a),
                                    std::abs(polys[i].b - polys[j].b),
                                    std::abs(polys[i].c - polys[j].c)});
      if (diff <= 1e-12) {
        throw DegenerateInputError("HitchinModel: sections " + std::to_string(j) + " and " +
                                   std::to_string(i) + " coincide");
      }
    }
  }
}

HitchinModel hitchin_limit(const MonopoleConfig& cfg) {
  cfg.validate();
  HitchinModel hm;
  for (const auto& m : cfg.points) hm.polys.push_back({-std::conj(m.c), m.b, m.c});
  hm.validate();
  return hm;
}

double hitchin_residual(const HitchinModel& hm, Complex x, Complex y, Complex z,
                        const SpherePoint& u) {
  const bool inverted = !u.in_affine_chart();
  const Complex w = inverted ? u.z1() : u.z0();
  Complex rhs = 1.0;
  for (const auto& p : hm.polys) rhs *= z - (inverted ? p.at_inverse(w) : p(w));
  const Complex lhs = x * y;
  const double den = std::abs(lhs) + std::abs(rhs);
  return den == 0.0 ? 0.0 : std::abs(lhs - rhs) / den;
}

std::vector<HitchinIntersection> hitchin_pairwise_intersections(const HitchinModel& hm) {
  std::vector<HitchinIntersection> out;
  for (int i = 0; i < hm.n(); ++i) {
    for (int j = i + 1; j < hm.n(); ++j) {
      const auto& p = hm.polys[i];
      const auto& q = hm.polys[j];
      const Complex a = p.a - q.a, b = p.b - q.b, c = p.c - q.c;
      if (std::max({std::abs(a), std::abs(b), std::abs(c)}) == 0.0) {
        throw DegenerateInputError("hitchin_pairwise_intersections: sections " +
                                   std::to_string(i) + " and " + std::to_string(j) +
                                   " are equal");
      }
      const auto roots = solve_binary_quadratic(a, b, c);
      HitchinIntersection x;
      x.i = i;
      x.j = j;
      x.first = roots.first;
      x.second = roots.second;
      x.tangent = roots.double_root;
      x.conjugacy_residual = chordal_distance(antipode(x.first), x.second);
      out.push_back(x);
    }
  }
  return out;
}

BiPoly central_fiber_pullback(const MonopoleConfig& cfg) {
  cfg.validate();
  BiPoly out = BiPoly::constant(1.0);
  for (const auto& m : cfg.points) out = out * curve_from_monopole(m, 0.0).poly();
  return out;
}

BiPoly uv_plus_one_power(int n) {
  if (n < 0) throw DomainError("uv_plus_one_power: n < 0");
  BiPoly out(n, n);
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    out.set_coeff(k, k, binom);
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

SpherePoint hitchin_coordinate(const QPoint& q) {
  const Complex num = q.u.z0() * q.v.z0() - q.u.z1() * q.v.z1();
  const Complex den = 2.0 * q.u.z0() * q.v.z1();
  if (num == Complex(0.0) && den == Complex(0.0)) {
    throw DegenerateInputError("hitchin_coordinate: undefined at (u, v) = (0, inf)");
  }
  return SpherePoint(num, den);
}

}  // namespace twistor
