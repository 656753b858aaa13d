#include <cmath>

#include "kernels_detail.hpp"
#include "twistor/kernels.hpp"

namespace twistor::kernels {

namespace detail {

// Compass search on |q(u)| from a grid minimum; both kernel paths share it.
GridMin refine_swap_min(const OneOneCurve& k, GridMin start, double step) {
  const std::array<Complex, 4> dirs{Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)};
  for (int iter = 0; iter < 4000 && step > 1e-15 && start.value > 0.0; ++iter) {
    bool improved = false;
    for (const auto& dir : dirs) {
      const Complex u = start.at + step * dir;
      const double val = std::abs(swap_restriction(k, u, start.inverted_chart));
      if (val < start.value) {
        start.value = val;
        start.at = u;
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  return start;
}

GridMin better(const GridMin& a, const GridMin& b) { return b.value < a.value ? b : a; }

}  // namespace detail

GridMin swap_restriction_grid_min_serial(const OneOneCurve& curve, int grid) {
  const OneOneCurve k = curve.normalized();
  GridMin best;
  for (int chart = 0; chart < 2; ++chart) {
    GridMin local;
    local.inverted_chart = chart == 1;
    for (int row = 0; row < grid; ++row) {
      for (int col = 0; col < grid; ++col) {
        Complex u;
        if (!grid_point(grid, row, col, u)) continue;
        const double val = std::abs(swap_restriction(k, u, local.inverted_chart));
        if (val < local.value) {
          local.value = val;
          local.at = u;
        }
      }
    }
    best = detail::better(best, detail::refine_swap_min(k, local, 2.0 / (grid - 1)));
  }
  return best;
}

PairMin pairwise_min_distance_serial(std::span<const FiberPoint> a, std::span<const FiberPoint> b,
                                     const FiberBidegrees& deg) {
  PairMin best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = point_distance(a[i], b[j], deg);
      if (d < best.value) best = {d, i, j};
    }
  }
  return best;
}

}  // namespace twistor::kernels
