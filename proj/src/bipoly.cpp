#include <algorithm>
#include <cmath>

#include "twistor/errors.hpp"
#include "twistor/polynomial.hpp"

namespace twistor {

BiPoly::BiPoly(int deg_u, int deg_v)
    : deg_u_(deg_u), deg_v_(deg_v), c_(static_cast<std::size_t>((deg_u + 1) * (deg_v + 1))) {}

BiPoly BiPoly::bilinear(Complex a, Complex b, Complex c, Complex d) {
  BiPoly p(1, 1);
  p.set_coeff(1, 1, a);
  p.set_coeff(1, 0, b);
  p.set_coeff(0, 1, c);
  p.set_coeff(0, 0, d);
  return p;
}

BiPoly BiPoly::constant(Complex value) {
  BiPoly p(0, 0);
  p.set_coeff(0, 0, value);
  return p;
}

Complex BiPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > deg_u_ || j > deg_v_) return 0.0;
  return c_[static_cast<std::size_t>(i * (deg_v_ + 1) + j)];
}

void BiPoly::set_coeff(int i, int j, Complex value) {
  c_.at(static_cast<std::size_t>(i * (deg_v_ + 1) + j)) = value;
}

Complex BiPoly::operator()(Complex u, Complex v) const {
  // Horner in u of Horner-in-v rows.
  Complex acc = 0.0;
  for (int i = deg_u_; i >= 0; --i) {
    Complex row = 0.0;
    for (int j = deg_v_; j >= 0; --j) row = row * v + coeff(i, j);
    acc = acc * u + row;
  }
  return acc;
}

BiPoly BiPoly::d_du() const {
  if (deg_u_ <= 0) return BiPoly::constant(0.0);
  BiPoly out(deg_u_ - 1, deg_v_);
  for (int i = 1; i <= deg_u_; ++i)
    for (int j = 0; j <= deg_v_; ++j) out.set_coeff(i - 1, j, static_cast<double>(i) * coeff(i, j));
  return out;
}

BiPoly BiPoly::d_dv() const {
  if (deg_v_ <= 0) return BiPoly::constant(0.0);
  BiPoly out(deg_u_, deg_v_ - 1);
  for (int i = 0; i <= deg_u_; ++i)
    for (int j = 1; j <= deg_v_; ++j) out.set_coeff(i, j - 1, static_cast<double>(j) * coeff(i, j));
  return out;
}

std::array<std::array<Complex, 2>, 2> BiPoly::hessian(Complex u, Complex v) const {
  const BiPoly gu = d_du();
  const BiPoly gv = d_dv();
  const Complex guu = gu.d_du()(u, v);
  const Complex guv = gu.d_dv()(u, v);
  const Complex gvv = gv.d_dv()(u, v);
  return {{{guu, guv}, {guv, gvv}}};
}

double BiPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const Complex& z : c_) m = std::max(m, std::abs(z));
  return m;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out(a.deg_u_ + b.deg_u_, a.deg_v_ + b.deg_v_);
  for (int i = 0; i <= a.deg_u_; ++i)
    for (int j = 0; j <= a.deg_v_; ++j) {
      const Complex ca = a.coeff(i, j);
      if (ca == Complex(0.0)) continue;
      for (int k = 0; k <= b.deg_u_; ++k)
        for (int l = 0; l <= b.deg_v_; ++l)
          out.set_coeff(i + k, j + l, out.coeff(i + k, j + l) + ca * b.coeff(k, l));
    }
  return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly out(std::max(a.deg_u_, b.deg_u_), std::max(a.deg_v_, b.deg_v_));
  for (int i = 0; i <= out.deg_u_; ++i)
    for (int j = 0; j <= out.deg_v_; ++j) out.set_coeff(i, j, a.coeff(i, j) + b.coeff(i, j));
  return out;
}

BinaryQuadraticRoots solve_binary_quadratic(Complex a, Complex b, Complex c, double tangent_tol) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (scale == 0.0) throw DegenerateInputError("binary quadratic vanishes identically");
  a /= scale;
  b /= scale;
  c /= scale;
  const Complex disc = b * b - 4.0 * a * c;
  const Complex root = std::sqrt(disc);
  // Pick the sign avoiding cancellation in b + sign * root.
  const double sign = (std::real(std::conj(b) * root) >= 0.0) ? 1.0 : -1.0;
  const Complex q = -0.5 * (b + sign * root);

  BinaryQuadraticRoots out;
  out.double_root = std::abs(disc) <= tangent_tol * std::max(std::norm(b), 4.0 * std::abs(a * c));
  if (std::abs(q) == 0.0) {
    // b = 0 and a c = 0: a single double root at 0 or infinity.
    out.first = (std::abs(a) > 0.0) ? SpherePoint::affine(0.0) : SpherePoint::infinity();
    out.second = out.first;
    out.double_root = true;
    return out;
  }
  out.first = SpherePoint(q, a);
  out.second = SpherePoint(c, q);
  return out;
}

}  // namespace twistor
