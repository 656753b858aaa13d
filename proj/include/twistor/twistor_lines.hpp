#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twistor/conic_bundle.hpp"
#include "twistor/projective.hpp"

namespace twistor {

// X_0: xy = (u - v)^n z^2 with x in O(1, n-1), y in O(n-1, 1), real structure AntipodalPair.
struct CoincidentModel {
  int n = 1;

  explicit CoincidentModel(int n_);
  ProjectiveModel model() const;
  FiberBidegrees bidegrees() const { return {1, n - 1, n - 1, 1}; }
};

// L(d, r, c): the real line over the minitwistor curve C(d, r) with U(1) phase c.
struct TwistorLineParams {
  SpherePoint d;
  double r = 0.5;
  Complex c = 1.0;

  // Throws DomainError unless 0 < r < 1 and ||c| - 1| < 1e-10.
  void validate() const;
};

// Homogeneous representatives of (u(t), v(t)) on C(d, r):
//   U = (d t1 - r t0, t1 + r conj(d) t0),  V = (r d t1 - t0, r t1 + conj(d) t0),
//   U = (t1, r t0), V = (r t1, t0) when d = infinity.
struct CurveReps {
  std::array<Complex, 2> u;
  std::array<Complex, 2> v;
};
CurveReps minitwistor_reps(const SpherePoint& d, double r, const SpherePoint& t);

// u = (d - r t) / (1 + r conj(d) t), v = (r d - t) / (r + conj(d) t); (1/(rt), r/t) at d = inf.
QPoint minitwistor_curve_eval(const SpherePoint& d, double r, const SpherePoint& t);

// Implicit equation of C(d, r) as a (1,1)-curve.
OneOneCurve minitwistor_curve(const SpherePoint& d, double r);

// Point of L(d, r, c) over t. In the representatives above, x = c K t0^n, y = K t1^n / c,
// z = 1 with K = ((1 + |d|^2)(1 - r^2))^(n/2) (positive root), K = (1 - r^2)^(n/2) at d = inf.
FiberPoint line_eval(const CoincidentModel& m, const TwistorLineParams& L, const SpherePoint& t);

// The parameter t with minitwistor_curve_eval(d, r, t) closest to `base`; exact when base
// lies on C(d, r).
SpherePoint curve_parameter(const SpherePoint& d, double r, const QPoint& base);

// (1 - r^2)^(n/2) / r. DomainError outside 0 < r < 1.
double f_r(int n, double r);
// -a (vmod^2 - a)^(n-1) / (1 + a): |xi|^2 over (0, v) for the line with parameter a.
// DomainError outside -1 < a < 0.
double g_a(int n, double vmod, double a);

struct LineSolution {
  TwistorLineParams params;
  double residual = 0.0;
  // ||c| - 1| of the fitted phase before it is rescaled to modulus 1.
  double c_modulus_error = 0.0;
  // Which branch produced the line: "generic" (a-family), "d=0" or "d=inf" over the diagonal.
  std::string branch;
};

// The unique real line of X_0 through p. Throws NoLineError naming the excluded locus
// ("not-on-model", "E", "E-bar", "L-infinity", "real-base"), ConsistencyError when a bisection
// fails to bracket or the recovered |c| is not 1.
LineSolution solve_line_through_point(const CoincidentModel& m, const FiberPoint& p);

// Deterministic, roughly uniform parameters on the t sphere (Fibonacci lattice).
std::vector<SpherePoint> sphere_lattice(std::size_t count);

std::vector<FiberPoint> sample_line(const CoincidentModel& m, const TwistorLineParams& L,
                                    std::size_t count);

// Distance from p to the line L, using the parameter read off from p's base.
double distance_to_line(const CoincidentModel& m, const TwistorLineParams& L, const FiberPoint& p);

// Symmetric Hausdorff distance between two lines on `count` lattice samples of each.
double line_hausdorff(const CoincidentModel& m, const TwistorLineParams& a,
                      const TwistorLineParams& b, std::size_t count = 20);

// Min distance between two lines: pairwise minimum over `samples` lattice points of each,
// refined by a compass search around the best pair.
double foliation_disjointness(const CoincidentModel& m, const TwistorLineParams& a,
                              const TwistorLineParams& b, std::size_t samples = 200);

// max(chordal(u, v) / 2, FS distance of the fiber to (0 : 0 : 1)): a proxy for the distance
// to L_infinity = {x = y = 0, u = v}, zero exactly on it.
double distance_to_l_infinity(const FiberPoint& p);

// Distance between σ(L(t)) and L(-1/conj t): zero for every t iff the line is real.
double line_reality_defect(const CoincidentModel& m, const TwistorLineParams& L,
                           const SpherePoint& t);

// Distance between p and its image under the lifted antipodal real structure.
double real_point_distance(const CoincidentModel& m, const FiberPoint& p);

// Min of real_point_distance over `samples` random points of X_0 above {v = -1/conj u}.
double no_real_point_check(const CoincidentModel& m, std::size_t samples, std::uint64_t seed = 42);

// Random admissible parameters; r is drawn from [0.05, 0.9].
TwistorLineParams random_line_params(std::uint64_t seed, std::uint64_t index);

}  // namespace twistor
