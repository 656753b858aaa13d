#pragma once

#include <array>

#include "twistor/polynomial.hpp"
#include "twistor/projective.hpp"

namespace twistor {

// A point (b, c) of R x C = R^3, the ellipsoid model of hyperbolic space.
struct MonopolePoint {
  double b = 0.0;
  Complex c = 0.0;
};

// Linear form x0 - b x1 - c x2 - conj(c) x3 on CP^3.
struct PlaneSection {
  std::array<Complex, 4> coeffs{1.0, 0.0, 0.0, 0.0};

  Complex operator()(const std::array<Complex, 4>& x) const;
};

// The (1,1)-curve a uv + b u + c v + d = 0 on CP^1 x CP^1.
//
// Coefficients are stored as complex numbers so that non-real curves can be represented
// (counterexamples, tangency constructions); reality is a predicate, not a construction-time
// invariant.
struct OneOneCurve {
  Complex a = 0.0;
  Complex b = 0.0;
  Complex c = 0.0;
  Complex d = 0.0;

  // a uv + b u + conj(b) v + d with a, d real.
  static OneOneCurve real(double a, Complex b, double d) { return {a, b, std::conj(b), d}; }

  // Bihomogeneous value a U0 V0 + b U0 V1 + c U1 V0 + d U1 V1 on the given representatives.
  Complex eval(const std::array<Complex, 2>& u, const std::array<Complex, 2>& v) const;
  Complex eval(const QPoint& p) const { return eval(p.u.rep(), p.v.rep()); }

  BiPoly poly() const { return BiPoly::bilinear(a, b, c, d); }
  double scale() const;
  OneOneCurve normalized() const;

  // Invariant under (u,v) -> (conj v, conj u): coefficients proportional to (a, b, conj b, d)
  // with a, d real, up to one common complex factor.
  bool is_swap_real(double tol = 1e-12) const;
  // Invariant under (u,v) -> (-1/conj v, -1/conj u).
  bool is_antipodal_real(double tol = 1e-12) const;
  bool is_real(RealStructure conv, double tol = 1e-12) const;
};

// Strict inequality b^2 + 4|c|^2 < 1/s^2. The s = 0 ellipsoid is all of R^3.
bool ellipsoid_contains(double s, const MonopolePoint& m);

PlaneSection plane_from_monopole(const MonopolePoint& m);

// (1 - b s) uv - 2 s c u - 2 s conj(c) v + (1 + b s): the plane section pulled back to Q_s.
OneOneCurve curve_from_monopole(const MonopolePoint& m, double s);

// (s b, s c) for 0 < s <= 1; DomainError otherwise.
MonopolePoint dilation_pullback(double s, const MonopolePoint& m);

// Closed-form test that the curve meets the fixed locus of `conv` nowhere.
//
// Swap: on {v = conj u} the curve restricts to the Hermitian form z^H M z with
// M = [[a, c], [b, d]]; it has no zero iff M is a multiple of a definite form, i.e.
// a d > |b|^2 for normalized real coefficients. AntipodalPair is reduced to Swap by the
// substitution v = -1/w. Throws DomainError for Cp3Family or a non-real curve.
bool real_point_free(const OneOneCurve& curve, RealStructure conv);

// The same curve written in the coordinates (u, w) with w = -1/v, where AntipodalPair
// becomes Swap.
OneOneCurve antipodal_to_swap_coordinates(const OneOneCurve& curve);

}  // namespace twistor
