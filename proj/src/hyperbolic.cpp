#include "twistor/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

#include "twistor/errors.hpp"

namespace twistor {

Complex PlaneSection::operator()(const std::array<Complex, 4>& x) const {
  return coeffs[0] * x[0] + coeffs[1] * x[1] + coeffs[2] * x[2] + coeffs[3] * x[3];
}

Complex OneOneCurve::eval(const std::array<Complex, 2>& u, const std::array<Complex, 2>& v) const {
  return a * u[0] * v[0] + b * u[0] * v[1] + c * u[1] * v[0] + d * u[1] * v[1];
}

double OneOneCurve::scale() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

OneOneCurve OneOneCurve::normalized() const {
  const double s = scale();
  if (s == 0.0) throw DegenerateInputError("OneOneCurve: all coefficients vanish");
  return {a / s, b / s, c / s, d / s};
}

namespace {

// Phase p = mu / conj(mu) such that M = p M^H for M = [[a, c], [b, d]], read off the
// entry of largest modulus.
Complex hermitian_phase(const OneOneCurve& k) {
  const double ma = std::abs(k.a);
  const double md = std::abs(k.d);
  const double mb = std::abs(k.b);
  if (ma >= md && ma >= mb) return k.a / std::conj(k.a);
  if (md >= mb) return k.d / std::conj(k.d);
  if (k.c == Complex(0.0)) return {std::nan(""), 0.0};
  return k.b / std::conj(k.c);
}

}  // namespace

bool OneOneCurve::is_swap_real(double tol) const {
  const double s = scale();
  if (s == 0.0) return false;
  const OneOneCurve k = normalized();
  const Complex p = hermitian_phase(k);
  return std::abs(k.a - p * std::conj(k.a)) <= tol && std::abs(k.d - p * std::conj(k.d)) <= tol &&
         std::abs(k.b - p * std::conj(k.c)) <= tol && std::abs(k.c - p * std::conj(k.b)) <= tol;
}

OneOneCurve antipodal_to_swap_coordinates(const OneOneCurve& k) {
  // P(u, -1/w) * w = b uw - a u + d w - c.
  return {k.b, -k.a, k.d, -k.c};
}

bool OneOneCurve::is_antipodal_real(double tol) const {
  return antipodal_to_swap_coordinates(*this).is_swap_real(tol);
}

bool OneOneCurve::is_real(RealStructure conv, double tol) const {
  switch (conv) {
    case RealStructure::Swap:
      return is_swap_real(tol);
    case RealStructure::AntipodalPair:
      return is_antipodal_real(tol);
    case RealStructure::Cp3Family:
      break;
  }
  throw DomainError("OneOneCurve::is_real: CP3_FAMILY is not a real structure on Q");
}

bool ellipsoid_contains(double s, const MonopolePoint& m) {
  if (s == 0.0) return true;
  return m.b * m.b + 4.0 * std::norm(m.c) < 1.0 / (s * s);
}

PlaneSection plane_from_monopole(const MonopolePoint& m) {
  return PlaneSection{{1.0, -m.b, -m.c, -std::conj(m.c)}};
}

OneOneCurve curve_from_monopole(const MonopolePoint& m, double s) {
  return {1.0 - m.b * s, -2.0 * s * m.c, -2.0 * s * std::conj(m.c), 1.0 + m.b * s};
}

MonopolePoint dilation_pullback(double s, const MonopolePoint& m) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("dilation_pullback: s must lie in (0, 1]");
  return {s * m.b, s * m.c};
}

bool real_point_free(const OneOneCurve& curve, RealStructure conv) {
  if (conv == RealStructure::Cp3Family) {
    throw DomainError("real_point_free: CP3_FAMILY is not a real structure on Q");
  }
  if (!curve.is_real(conv, 1e-12)) throw DomainError("real_point_free: curve is not real");
  const OneOneCurve k = (conv == RealStructure::Swap ? curve : antipodal_to_swap_coordinates(curve))
                            .normalized();
  // det M = mu^2 det H; multiplying by conj(p) = conj(mu)/mu leaves |mu|^2 det H.
  const Complex det = k.a * k.d - k.b * k.c;
  return std::real(det * std::conj(hermitian_phase(k))) > 0.0;
}

}  // namespace twistor
