#pragma once

// Data-parallel sampling kernels. Every kernel has a serial reference path and an OpenMP
// path; reductions are restricted to min / max / count so both paths return bit-identical
// results regardless of scheduling.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <limits>
#include <span>
#include <vector>

#include "twistor/conic_bundle.hpp"
#include "twistor/hyperbolic.hpp"

namespace twistor::kernels {

enum class Exec { Serial, Parallel };

namespace detail {

// Exceptions must not escape an OpenMP region; the first one (in index order) is kept and
// rethrown after the loop.
class FirstError {
 public:
  void capture(long long index) {
#pragma omp critical(twistor_first_error)
    if (!error_ || index < index_) {
      error_ = std::current_exception();
      index_ = index;
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
  long long index_ = 0;
};

}  // namespace detail

// f must be callable concurrently for distinct indices.
template <class F>
double max_over(Exec exec, std::size_t n, F&& f) {
  double best = -std::numeric_limits<double>::infinity();
  const auto count = static_cast<long long>(n);
  detail::FirstError err;
  auto eval = [&](long long i) {
    try {
      return f(static_cast<std::size_t>(i));
    } catch (...) {
      err.capture(i);
      return -std::numeric_limits<double>::infinity();
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for reduction(max : best) schedule(dynamic, 8)
    for (long long i = 0; i < count; ++i) best = std::max(best, eval(i));
  } else {
    for (long long i = 0; i < count; ++i) best = std::max(best, eval(i));
  }
  err.rethrow();
  return best;
}

template <class F>
double min_over(Exec exec, std::size_t n, F&& f) {
  double best = std::numeric_limits<double>::infinity();
  const auto count = static_cast<long long>(n);
  detail::FirstError err;
  auto eval = [&](long long i) {
    try {
      return f(static_cast<std::size_t>(i));
    } catch (...) {
      err.capture(i);
      return std::numeric_limits<double>::infinity();
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for reduction(min : best) schedule(dynamic, 8)
    for (long long i = 0; i < count; ++i) best = std::min(best, eval(i));
  } else {
    for (long long i = 0; i < count; ++i) best = std::min(best, eval(i));
  }
  err.rethrow();
  return best;
}

template <class F>
std::size_t count_if(Exec exec, std::size_t n, F&& pred) {
  long long hits = 0;
  const auto count = static_cast<long long>(n);
  detail::FirstError err;
  auto eval = [&](long long i) -> long long {
    try {
      return pred(static_cast<std::size_t>(i)) ? 1 : 0;
    } catch (...) {
      err.capture(i);
      return 0;
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for reduction(+ : hits) schedule(dynamic, 8)
    for (long long i = 0; i < count; ++i) hits += eval(i);
  } else {
    for (long long i = 0; i < count; ++i) hits += eval(i);
  }
  err.rethrow();
  return static_cast<std::size_t>(hits);
}

// Result of a grid search: the minimum and where it occurred.
struct GridMin {
  double value = std::numeric_limits<double>::infinity();
  Complex at = 0.0;
  bool inverted_chart = false;
};

// min |a|u|^2 + b u + c conj(u) + d| over a grid x grid lattice on the closed unit disk,
// in the u chart and in the 1/u chart (together covering the sphere). The curve is
// scale-normalized first.
GridMin swap_restriction_grid_min_serial(const OneOneCurve& curve, int grid);
GridMin swap_restriction_grid_min_omp(const OneOneCurve& curve, int grid);

struct PairMin {
  double value = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  std::size_t j = 0;
};

// min over (i, j) of point_distance(a[i], b[j]).
PairMin pairwise_min_distance_serial(std::span<const FiberPoint> a, std::span<const FiberPoint> b,
                                     const FiberBidegrees& deg);
PairMin pairwise_min_distance_omp(std::span<const FiberPoint> a, std::span<const FiberPoint> b,
                                  const FiberBidegrees& deg);

inline GridMin swap_restriction_grid_min(Exec exec, const OneOneCurve& curve, int grid) {
  return exec == Exec::Parallel ? swap_restriction_grid_min_omp(curve, grid)
                                : swap_restriction_grid_min_serial(curve, grid);
}

inline PairMin pairwise_min_distance(Exec exec, std::span<const FiberPoint> a,
                                     std::span<const FiberPoint> b, const FiberBidegrees& deg) {
  return exec == Exec::Parallel ? pairwise_min_distance_omp(a, b, deg)
                                : pairwise_min_distance_serial(a, b, deg);
}

// Lattice point (row, col) of a grid x grid lattice on [-1, 1]^2, or nullopt-like flag when
// outside the unit disk. Shared by both kernel paths.
inline bool grid_point(int grid, int row, int col, Complex& out) {
  const double step = 2.0 / (grid - 1);
  out = Complex(-1.0 + step * col, -1.0 + step * row);
  return std::norm(out) <= 1.0 + 1e-15;
}

// a|u|^2 + b u + c conj(u) + d, and the same form in the chart w = 1/u (scaled by |w|^2).
inline Complex swap_restriction(const OneOneCurve& k, Complex u, bool inverted) {
  if (inverted) return k.a + k.b * std::conj(u) + k.c * u + k.d * std::norm(u);
  return k.a * std::norm(u) + k.b * u + k.c * std::conj(u) + k.d;
}

}  // namespace twistor::kernels
