#pragma once

#include <array>
#include <complex>
#include <utility>

namespace twistor {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

// A point [z0 : z1] of CP^1 with affine value z0 / z1. The point at infinity is [1 : 0].
//
// Stored in canonical form: the entry of larger modulus is exactly 1 (ties go to z1), so the
// representative doubles as the affine chart the point lives in.
class SpherePoint {
 public:
  SpherePoint() : z0_(0.0), z1_(1.0) {}
  // Throws DegenerateInputError on (0, 0) or non-finite entries.
  SpherePoint(Complex z0, Complex z1);

  static SpherePoint affine(Complex u) { return SpherePoint(u, 1.0); }
  static SpherePoint infinity() { return SpherePoint(1.0, 0.0); }

  Complex z0() const { return z0_; }
  Complex z1() const { return z1_; }
  std::array<Complex, 2> rep() const { return {z0_, z1_}; }

  // True when the representative is (u, 1), i.e. the point is in the u-chart.
  bool in_affine_chart() const { return z1_ == Complex(1.0); }
  bool is_infinity(double tol = 0.0) const { return std::abs(z1_) <= tol; }
  // Affine value z0 / z1; infinite components when the point is at infinity.
  Complex value() const { return z0_ / z1_; }

 private:
  Complex z0_;
  Complex z1_;
};

// |p0 q1 - p1 q0| / (|p| |q|): the chordal metric, chart independent, bounded by 1.
double chordal_distance(const SpherePoint& p, const SpherePoint& q);

// Scalar lambda with q.rep() ~= lambda * p.rep() (least squares); used to re-express bundle
// values relative to a nearby representative.
Complex rep_ratio(const SpherePoint& p, const SpherePoint& q);

struct QPoint {
  SpherePoint u;
  SpherePoint v;
};

// Product metric on Q = CP^1 x CP^1: the larger of the two chordal distances.
double chordal_distance(const QPoint& p, const QPoint& q);

// Homogeneous 4-tuple, canonical form as for SpherePoint (largest entry is 1, first on ties).
class CP3Point {
 public:
  CP3Point() : x_{1.0, 0.0, 0.0, 0.0} {}
  explicit CP3Point(const std::array<Complex, 4>& x);

  const std::array<Complex, 4>& coords() const { return x_; }
  Complex operator[](std::size_t i) const { return x_[i]; }

 private:
  std::array<Complex, 4> x_;
};

// Fubini-Study chordal distance sqrt(1 - |<a,b>|^2 / (|a|^2 |b|^2)), evaluated as |a ^ b| / (|a| |b|).
double fs_distance(const CP3Point& a, const CP3Point& b);
double fs_distance(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b);

enum class RealStructure {
  Swap,           // (u, v) -> (conj v, conj u)
  AntipodalPair,  // (u, v) -> (-1/conj v, -1/conj u)
  Cp3Family,      // (x0, x1, x2, x3) x s -> (conj x0, conj x1, conj x3, conj x2) x conj s
};

const char* to_string(RealStructure conv);

// Anti-holomorphic involution of Q. Throws DomainError for Cp3Family.
QPoint sigma_q(RealStructure conv, const QPoint& p);

// Componentwise antipodal map u -> -1/conj(u); it has no fixed point on CP^1.
SpherePoint antipode(const SpherePoint& p);

std::pair<CP3Point, Complex> sigma_cp3(const CP3Point& p, Complex s);

// u -> (alpha u + beta) / (-conj(beta) u + conj(alpha)) with |alpha|^2 + |beta|^2 = 1.
class SU2Element {
 public:
  SU2Element() : alpha_(1.0), beta_(0.0) {}
  // Throws DomainError unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
  SU2Element(Complex alpha, Complex beta);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }

  SU2Element inverse() const { return SU2Element(std::conj(alpha_), -beta_); }
  SpherePoint apply(const SpherePoint& p) const;

  // Matrix product: (g * h).apply(p) == g.apply(h.apply(p)).
  friend SU2Element operator*(const SU2Element& g, const SU2Element& h);

 private:
  Complex alpha_;
  Complex beta_;
};

QPoint su2_apply(const SU2Element& g, const QPoint& p);

// Rotation carrying p to 0: beta = -alpha u, alpha = 1/sqrt(1 + |u|^2); (0, 1) when p = infinity.
SU2Element su2_reduce_to_axis(const SpherePoint& p);
// As above for the first factor of a point of Q.
SU2Element su2_reduce_to_axis(const QPoint& p);

}  // namespace twistor
