#pragma once

#include "twistor/kernels.hpp"

namespace twistor::kernels::detail {

GridMin refine_swap_min(const OneOneCurve& k, GridMin start, double step);
GridMin better(const GridMin& a, const GridMin& b);

}  // namespace twistor::kernels::detail
