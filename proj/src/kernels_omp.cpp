#include <cmath>
#include <vector>

#include "kernels_detail.hpp"
#include "twistor/kernels.hpp"

// Row-wise minima are computed in parallel and merged in index order, so the result matches
// the serial kernel exactly (first minimum in row-major order wins ties).

namespace twistor::kernels {

GridMin swap_restriction_grid_min_omp(const OneOneCurve& curve, int grid) {
  const OneOneCurve k = curve.normalized();
  GridMin best;
  for (int chart = 0; chart < 2; ++chart) {
    const bool inverted = chart == 1;
    std::vector<GridMin> rows(static_cast<std::size_t>(grid));
#pragma omp parallel for schedule(static)
    for (int row = 0; row < grid; ++row) {
      GridMin local;
      local.inverted_chart = inverted;
      for (int col = 0; col < grid; ++col) {
        Complex u;
        if (!grid_point(grid, row, col, u)) continue;
        const double val = std::abs(swap_restriction(k, u, inverted));
        if (val < local.value) {
          local.value = val;
          local.at = u;
        }
      }
      rows[static_cast<std::size_t>(row)] = local;
    }
    GridMin local;
    local.inverted_chart = inverted;
    for (const auto& r : rows) {
      if (r.value < local.value) local = r;
    }
    best = detail::better(best, detail::refine_swap_min(k, local, 2.0 / (grid - 1)));
  }
  return best;
}

PairMin pairwise_min_distance_omp(std::span<const FiberPoint> a, std::span<const FiberPoint> b,
                                  const FiberBidegrees& deg) {
  std::vector<PairMin> rows(a.size());
  const auto count = static_cast<long long>(a.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long long ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    PairMin local;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = point_distance(a[i], b[j], deg);
      if (d < local.value) local = {d, i, j};
    }
    rows[i] = local;
  }
  PairMin best;
  for (const auto& r : rows) {
    if (r.value < best.value) best = r;
  }
  return best;
}

}  // namespace twistor::kernels
