// Serial vs OpenMP timings for the sampling kernels.

#include <chrono>
#include <cstdio>
#include <omp.h>

#include "twistor/kernels.hpp"
#include "twistor/sampling.hpp"
#include "twistor/twistor_lines.hpp"

using namespace twistor;

namespace {

template <class F>
double time_ms(int reps, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() /
         reps;
}

void row(const char* name, double serial, double omp, bool same) {
  std::printf("%-28s %10.2f %10.2f %8.2fx  %s\n", name, serial, omp, serial / omp,
              same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  const OneOneCurve curve = OneOneCurve::real(1.0, {0.3, -0.2}, 0.7);
  kernels::GridMin gs, gp;
  const double ts = time_ms(5, [&] { gs = kernels::swap_restriction_grid_min_serial(curve, 400); });
  const double tp = time_ms(5, [&] { gp = kernels::swap_restriction_grid_min_omp(curve, 400); });
  row("grid_min 400x400", ts, tp, gs.value == gp.value && gs.at == gp.at);

  const CoincidentModel m(3);
  const auto a = sample_line(m, random_line_params(1, 0), 400);
  const auto b = sample_line(m, random_line_params(1, 1), 400);
  kernels::PairMin ps, pp;
  const double t2s = time_ms(3, [&] { ps = kernels::pairwise_min_distance_serial(a, b, m.bidegrees()); });
  const double t2p = time_ms(3, [&] { pp = kernels::pairwise_min_distance_omp(a, b, m.bidegrees()); });
  row("pairwise_min 400x400", t2s, t2p, ps.value == pp.value && ps.i == pp.i && ps.j == pp.j);

  const ProjectiveModel x0 = m.model();
  auto residual = [&](std::size_t i) {
    Sampler rng(7, "bench", i);
    return defining_residual(x0, line_eval(m, random_line_params(7, i), rng.sphere_point()));
  };
  double rs = 0.0, rp = 0.0;
  const double t3s = time_ms(3, [&] { rs = kernels::max_over(kernels::Exec::Serial, 100000, residual); });
  const double t3p = time_ms(3, [&] { rp = kernels::max_over(kernels::Exec::Parallel, 100000, residual); });
  row("max residual 1e5 lines", t3s, t3p, rs == rp);
  return 0;
}
