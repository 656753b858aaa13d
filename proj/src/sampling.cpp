#include "twistor/sampling.hpp"

#include <cmath>
#include <numbers>

namespace twistor {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

Sampler::Sampler(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  const std::uint64_t tag = fnv1a64(stream);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int Sampler::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Complex Sampler::uniform_box(double half_width) {
  const double re = uniform(-half_width, half_width);
  const double im = uniform(-half_width, half_width);
  return {re, im};
}

Complex Sampler::log_uniform_polar(double lo, double hi) {
  const double r = std::exp(uniform(std::log(lo), std::log(hi)));
  return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
}

Complex Sampler::unit_phase() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

SpherePoint Sampler::sphere_point() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  // Stereographic projection from the north pole: u = (x + i y) / (1 - z).
  return SpherePoint(Complex(rho * std::cos(phi), rho * std::sin(phi)), 1.0 - z);
}

QPoint Sampler::q_point() {
  SpherePoint u = sphere_point();
  SpherePoint v = sphere_point();
  return {u, v};
}

}  // namespace twistor
