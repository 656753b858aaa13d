#pragma once

#include <array>
#include <vector>

#include "twistor/projective.hpp"

namespace twistor {

// Polynomial sum_{i,j} c(i,j) u^i v^j with complex coefficients.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(int deg_u, int deg_v);

  // a uv + b u + c v + d.
  static BiPoly bilinear(Complex a, Complex b, Complex c, Complex d);
  static BiPoly constant(Complex value);

  int deg_u() const { return deg_u_; }
  int deg_v() const { return deg_v_; }

  Complex coeff(int i, int j) const;
  void set_coeff(int i, int j, Complex value);

  Complex operator()(Complex u, Complex v) const;
  BiPoly d_du() const;
  BiPoly d_dv() const;

  // [[g_uu, g_uv], [g_uv, g_vv]] at (u, v).
  std::array<std::array<Complex, 2>, 2> hessian(Complex u, Complex v) const;

  double max_abs_coeff() const;

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);

 private:
  int deg_u_ = -1;
  int deg_v_ = -1;
  std::vector<Complex> c_;  // row-major in i (u-degree)
};

// Roots [x0 : x1] of the binary quadratic A x0^2 + B x0 x1 + C x1^2.
struct BinaryQuadraticRoots {
  SpherePoint first;
  SpherePoint second;
  bool double_root = false;
};

// Throws DegenerateInputError when the form vanishes identically (relative to `scale`).
// `tangent_tol` is the relative threshold on the discriminant for flagging a double root.
BinaryQuadraticRoots solve_binary_quadratic(Complex a, Complex b, Complex c,
                                            double tangent_tol = 1e-9);

}  // namespace twistor
