#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "twistor/projective.hpp"

namespace twistor {

std::uint64_t fnv1a64(std::string_view bytes);

// Generator for sample `index` of the named stream. Every sample draws from its own
// substream, so results do not depend on how samples are scheduled across threads.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view stream, std::uint64_t index);

  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);
  Complex uniform_box(double half_width);
  // Complex number with log-uniform modulus in [lo, hi] and uniform phase.
  Complex log_uniform_polar(double lo, double hi);
  Complex unit_phase();
  // Uniform point of the round sphere, read through stereographic projection.
  SpherePoint sphere_point();
  QPoint q_point();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace twistor
