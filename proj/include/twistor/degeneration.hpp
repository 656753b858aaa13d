#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "twistor/conic_bundle.hpp"
#include "twistor/hyperbolic.hpp"
#include "twistor/polynomial.hpp"
#include "twistor/projective.hpp"

namespace twistor {

// s^2 x0^2 - x1^2 - x2 x3 on the canonical representative.
double quadric_residual(const CP3Point& p, Complex s);

// A point of the quadric Q_s inside CP^3, tagged with s.
struct QuadricFamilyPoint {
  CP3Point p;
  Complex s = 1.0;

  // Throws DomainError when quadric_residual >= 1e-9.
  QuadricFamilyPoint(const CP3Point& p_, Complex s_);
};

// (U0 V0 + U1 V1, s (U0 V0 - U1 V1), 2 s U0 V1, 2 s U1 V0): the affine (uv + 1, s(uv - 1),
// 2su, 2sv) written bihomogeneously. DomainError for s = 0.
QuadricFamilyPoint phi_inverse(const QPoint& q, Complex s);

// u = [x2 : s x0 - x1] = [s x0 + x1 : x3], v = [x3 : s x0 - x1] = [s x0 + x1 : x2]; each
// coordinate uses whichever pair has larger norm. DomainError for s = 0.
QPoint phi(const QuadricFamilyPoint& qp);

// Image of D1 ∩ Q_s = {x3 = 0, x1 = s x0} and D2 ∩ Q_s = {x2 = 0, x1 = s x0} under phi.
struct DivisorCheckReport {
  double s = 1.0;
  // Chordal spread of each sphere coordinate over the samples.
  double d1_u_spread = 0.0;
  double d1_v_spread = 0.0;
  double d2_u_spread = 0.0;
  double d2_v_spread = 0.0;
  SpherePoint d1_u;  // the constant u of the D1 image
  SpherePoint d2_v;  // the constant v of the D2 image
  bool d1_class_10 = false;
  bool d2_class_01 = false;
  // max over D1 samples of the D2 equations evaluated at sigma_cp3 of the sample.
  double sigma_exchange_residual = 0.0;
};

DivisorCheckReport divisor_restriction_check(double s, std::size_t samples = 64,
                                             std::uint64_t seed = 42);

struct MonopoleConfig {
  int n = 0;
  std::vector<MonopolePoint> points;

  // n >= 1, n == points.size(), finite entries, pairwise distance > 1e-9.
  void validate() const;
};

MonopoleConfig make_config(std::vector<MonopolePoint> points);

// Curves curve_from_monopole(m, s) in the swap coordinates. DomainError for s = 0 or when a
// monopole leaves B(s) (the message names its index).
ProjectiveModel member_fiber_model(const MonopoleConfig& cfg, double s);

// |plane(phi_inverse(q, s)) - curve_from_monopole(m, s)(q)| relative to the larger side.
double plane_pullback_residual(const MonopolePoint& m, double s, const QPoint& q);

// a u^2 + b u + c, a section of O(2).
struct QuadraticSection {
  Complex a = 0.0;
  Complex b = 0.0;
  Complex c = 0.0;

  Complex operator()(Complex u) const { return (a * u + b) * u + c; }
  // Value in the chart w = 1/u: a + b w + c w^2.
  Complex at_inverse(Complex w) const { return a + (b + c * w) * w; }
};

// max(|a + conj c|, |Im b|): zero iff the section is real.
double reality_residual(const QuadraticSection& p);

// p^sigma(u) = -u^2 conj(p(-1/conj u)), i.e. (a, b, c) -> (-conj c, conj b, -conj a).
QuadraticSection hitchin_sigma(const QuadraticSection& p);

// xy = prod (z - p_i(u)).
struct HitchinModel {
  std::vector<QuadraticSection> polys;

  // Reality within 1e-12 and pairwise distinct sections.
  void validate() const;
  int n() const { return static_cast<int>(polys.size()); }
};

// p_i(u) = -conj(c_i) u^2 + b_i u + c_i.
HitchinModel hitchin_limit(const MonopoleConfig& cfg);

// Scale-normalized |xy - prod (z - p_i(u))| in the canonical chart of u: when |u| > 1 the
// inputs are read in w = 1/u, with x, y sections of O(n) and z, p_i sections of O(2).
double hitchin_residual(const HitchinModel& hm, Complex x, Complex y, Complex z,
                        const SpherePoint& u);

struct HitchinIntersection {
  int i = 0;
  int j = 0;
  SpherePoint first;
  SpherePoint second;
  bool tangent = false;
  // chordal distance between u -> -1/conj u of the first root and the second root.
  double conjugacy_residual = 0.0;
};

// Roots of p_i - p_j, as a binary quadratic. DegenerateInputError for equal sections.
std::vector<HitchinIntersection> hitchin_pairwise_intersections(const HitchinModel& hm);

// prod_i curve_from_monopole(m_i, 0) as a polynomial in (u, v).
BiPoly central_fiber_pullback(const MonopoleConfig& cfg);

// (uv + 1)^n with binomial coefficients.
BiPoly uv_plus_one_power(int n);

// Hitchin-chart coordinate x1 / x2 of phi_inverse(q, s), i.e. (uv - 1) / (2u); the
// intersection points of Z_s converge to the roots of p_i - p_j in this coordinate.
SpherePoint hitchin_coordinate(const QPoint& q);

}  // namespace twistor
