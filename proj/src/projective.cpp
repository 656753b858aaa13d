#include "twistor/projective.hpp"

#include <algorithm>
#include <cmath>

#include "twistor/errors.hpp"

namespace twistor {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

SpherePoint::SpherePoint(Complex z0, Complex z1) {
  if (!finite(z0) || !finite(z1)) {
    throw DegenerateInputError("SpherePoint: non-finite homogeneous coordinate");
  }
  if (z0 == Complex(0.0) && z1 == Complex(0.0)) {
    throw DegenerateInputError("SpherePoint: (0, 0) is not a point of CP^1");
  }
  if (std::abs(z0) > std::abs(z1)) {
    z1_ = z1 / z0;
    z0_ = 1.0;
  } else {
    z0_ = z0 / z1;
    z1_ = 1.0;
  }
}

double chordal_distance(const SpherePoint& p, const SpherePoint& q) {
  const double num = std::abs(p.z0() * q.z1() - p.z1() * q.z0());
  const double np = std::hypot(std::abs(p.z0()), std::abs(p.z1()));
  const double nq = std::hypot(std::abs(q.z0()), std::abs(q.z1()));
  return num / (np * nq);
}

Complex rep_ratio(const SpherePoint& p, const SpherePoint& q) {
  const Complex inner = std::conj(p.z0()) * q.z0() + std::conj(p.z1()) * q.z1();
  return inner / (std::norm(p.z0()) + std::norm(p.z1()));
}

double chordal_distance(const QPoint& p, const QPoint& q) {
  return std::max(chordal_distance(p.u, q.u), chordal_distance(p.v, q.v));
}

CP3Point::CP3Point(const std::array<Complex, 4>& x) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!finite(x[i])) throw DegenerateInputError("CP3Point: non-finite coordinate");
    if (std::abs(x[i]) > std::abs(x[k])) k = i;
  }
  if (x[k] == Complex(0.0)) throw DegenerateInputError("CP3Point: all coordinates vanish");
  for (std::size_t i = 0; i < 4; ++i) x_[i] = (i == k) ? Complex(1.0) : x[i] / x[k];
}

namespace {

// |a ^ b| / (|a| |b|), the sine of the Hermitian angle. Computed from the 2x2 minors rather
// than as sqrt(1 - cos^2), which cannot resolve distances below ~1e-8.
template <std::size_t N>
double fs_distance_impl(const std::array<Complex, N>& a, const std::array<Complex, N>& b) {
  double scale_a = 0.0;
  double scale_b = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    scale_a = std::max(scale_a, std::abs(a[i]));
    scale_b = std::max(scale_b, std::abs(b[i]));
  }
  double wedge = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    const Complex ai = a[i] / scale_a;
    const Complex bi = b[i] / scale_b;
    na += std::norm(ai);
    nb += std::norm(bi);
    for (std::size_t j = i + 1; j < N; ++j) {
      wedge += std::norm(ai * (b[j] / scale_b) - (a[j] / scale_a) * bi);
    }
  }
  return std::min(1.0, std::sqrt(wedge / (na * nb)));
}

}  // namespace

double fs_distance(const CP3Point& a, const CP3Point& b) {
  return fs_distance_impl(a.coords(), b.coords());
}

double fs_distance(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b) {
  return fs_distance_impl(a, b);
}

const char* to_string(RealStructure conv) {
  switch (conv) {
    case RealStructure::Swap:
      return "SWAP";
    case RealStructure::AntipodalPair:
      return "ANTIPODAL_PAIR";
    case RealStructure::Cp3Family:
      return "CP3_FAMILY";
  }
  return "?";
}

SpherePoint antipode(const SpherePoint& p) {
  return SpherePoint(-std::conj(p.z1()), std::conj(p.z0()));
}

QPoint sigma_q(RealStructure conv, const QPoint& p) {
  switch (conv) {
    case RealStructure::Swap:
      return {SpherePoint(std::conj(p.v.z0()), std::conj(p.v.z1())),
              SpherePoint(std::conj(p.u.z0()), std::conj(p.u.z1()))};
    case RealStructure::AntipodalPair:
      return {antipode(p.v), antipode(p.u)};
    case RealStructure::Cp3Family:
      break;
  }
  throw DomainError("sigma_q: CP3_FAMILY acts on the quadric family, not on Q");
}

std::pair<CP3Point, Complex> sigma_cp3(const CP3Point& p, Complex s) {
  return {CP3Point({std::conj(p[0]), std::conj(p[1]), std::conj(p[3]), std::conj(p[2])}),
          std::conj(s)};
}

SU2Element::SU2Element(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12) {
    throw DomainError("SU2Element: |alpha|^2 + |beta|^2 != 1");
  }
}

SpherePoint SU2Element::apply(const SpherePoint& p) const {
  return SpherePoint(alpha_ * p.z0() + beta_ * p.z1(),
                     -std::conj(beta_) * p.z0() + std::conj(alpha_) * p.z1());
}

SU2Element operator*(const SU2Element& g, const SU2Element& h) {
  SU2Element out;
  out.alpha_ = g.alpha_ * h.alpha_ - g.beta_ * std::conj(h.beta_);
  out.beta_ = g.alpha_ * h.beta_ + g.beta_ * std::conj(h.alpha_);
  return out;
}

QPoint su2_apply(const SU2Element& g, const QPoint& p) { return {g.apply(p.u), g.apply(p.v)}; }

SU2Element su2_reduce_to_axis(const SpherePoint& p) {
  if (p.is_infinity()) return SU2Element(0.0, 1.0);
  // Homogeneous form of alpha = 1/sqrt(1+|u|^2), beta = -alpha u.
  const double norm = std::hypot(std::abs(p.z0()), std::abs(p.z1()));
  const double m1 = std::abs(p.z1());
  return SU2Element(m1 / norm, -p.z0() * (std::conj(p.z1()) / m1) / norm);
}

SU2Element su2_reduce_to_axis(const QPoint& p) { return su2_reduce_to_axis(p.u); }

}  // namespace twistor
