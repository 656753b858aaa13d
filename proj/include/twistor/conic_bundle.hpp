#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistor/hyperbolic.hpp"
#include "twistor/polynomial.hpp"
#include "twistor/projective.hpp"

namespace twistor {

// Bidegrees of the fiber coordinates: x in O(xu, xv), y in O(yu, yv), z in O.
struct FiberBidegrees {
  int xu = 0;
  int xv = 0;
  int yu = 0;
  int yv = 0;
};

// Which line bundle the coordinate x is a section of.
//   Standard:   x in O(n-1, 1), y in O(1, n-1)   (LeBrun models in the swap coordinates)
//   Transposed: x in O(1, n-1), y in O(n-1, 1)   (the coincident model X_0 in the
//               antipodal coordinates, where the explicit twistor lines live)
enum class XBundle { Standard, Transposed };

// xy = P_1 ... P_n z^2 inside P(O(n-1,1) + O(1,n-1) + O) over Q.
struct ProjectiveModel {
  int n = 1;
  std::vector<OneOneCurve> curves;
  XBundle x_bundle = XBundle::Standard;

  FiberBidegrees bidegrees() const;
  // Product of the curves' bihomogeneous values on the given representatives.
  Complex discriminant(const std::array<Complex, 2>& u, const std::array<Complex, 2>& v) const;
  // Product of the scale-normalized curves at the canonical representatives of q.
  Complex normalized_discriminant(const QPoint& q) const;
};

// Validates n >= 1 and n == curves.size().
ProjectiveModel make_model(std::vector<OneOneCurve> curves, XBundle x_bundle = XBundle::Standard);

// A point of P(E_n): base point and (x : y : z), the latter taken relative to the canonical
// representatives of the base (so relative to the affine chart that base.u / base.v live in).
// The triple is normalized to max modulus 1 with that entry real positive.
class FiberPoint {
 public:
  FiberPoint() = default;
  FiberPoint(const QPoint& base, const std::array<Complex, 3>& fiber);

  // Build from arbitrary (non-canonical) representatives of the base point.
  static FiberPoint from_reps(const std::array<Complex, 2>& u_rep,
                              const std::array<Complex, 2>& v_rep,
                              const std::array<Complex, 3>& fiber, const FiberBidegrees& deg);

  const QPoint& base() const { return base_; }
  const std::array<Complex, 3>& fiber() const { return fiber_; }
  Complex x() const { return fiber_[0]; }
  Complex y() const { return fiber_[1]; }
  Complex z() const { return fiber_[2]; }

 private:
  QPoint base_;
  std::array<Complex, 3> fiber_{0.0, 0.0, 1.0};
};

// The fiber triple of p re-expressed relative to the representatives of `ref` (which must be
// close to p's base; the conversion uses the least-squares scalar between representatives).
std::array<Complex, 3> fiber_relative_to(const FiberPoint& p, const QPoint& ref,
                                         const FiberBidegrees& deg);

// Distance between two points of the bundle: max of the base chordal distance and the
// Fubini-Study distance of the fibers expressed over a common representative.
double point_distance(const FiberPoint& p, const FiberPoint& q, const FiberBidegrees& deg);

// One of the four affine charts (u or 1/u) x (v or 1/v).
struct Chart {
  bool u_inverted = false;
  bool v_inverted = false;
};

// The chart a canonical representative lives in.
Chart chart_of(const QPoint& q);

struct ChartCoords {
  Complex u;
  Complex v;
  Complex x;
  Complex y;
  Complex z;
};

// Affine coordinates of p in `chart`; sections of O(p,q) pick up u'^p v'^q factors.
// Throws DomainError when the base is not in the chart.
ChartCoords to_chart(const FiberPoint& p, Chart chart, const FiberBidegrees& deg);

// The curve's local equation P'(u', v') in `chart` (e.g. u' P(1/u', v) for the 1/u chart).
OneOneCurve curve_in_chart(const OneOneCurve& curve, Chart chart);

// |xy - G z^2| / (|xy| + S |z|^2) with S = prod (|a U0 V0| + |b U0 V1| + |c U1 V0| + |d U1 V1|),
// the natural size of G. Zero when both sides vanish; unchanged by rescaling the
// representatives, so chart independent.
double defining_residual(const ProjectiveModel& model, const FiberPoint& p);
double defining_residual(const ProjectiveModel& model, const ChartCoords& c, Chart chart);

enum class FiberType { SmoothConic, LinePair };

FiberType fiber_type(const ProjectiveModel& model, const QPoint& q, double tol = 1e-9);

struct Intersection {
  int i = 0;
  int j = 0;
  QPoint first;
  QPoint second;
  bool tangent = false;
};

// The two solutions of P_i = P_j = 0 for a pair of curves, by eliminating v: the resultant
// in (u0 : u1) is a binary quadratic. Throws DegenerateInputError for proportional curves.
Intersection intersect_curves(const OneOneCurve& p, const OneOneCurve& q, int i = 0, int j = 1);

std::vector<Intersection> pairwise_intersections(const ProjectiveModel& model);

// Singular point of a reducible curve (a d - b c = 0): the crossing of its two rulings.
// Returns false when the curve is irreducible.
bool reducible_crossing(const OneOneCurve& curve, QPoint& out, double tol = 1e-12);

enum class Singularity { OrdinaryDoublePoint, Degenerate, Nonsingular };

const char* to_string(Singularity s);

struct SingularPointReport {
  QPoint base;
  std::pair<int, int> curve_indices;
  Singularity classification = Singularity::Nonsingular;
  std::array<Complex, 3> fiber{0.0, 0.0, 1.0};
};

// The local equation of the model near the base is xy = g(u, v), so the threefold has an
// ordinary double point iff g has a nondegenerate critical zero there. Nondegeneracy is
// |det Hess g| / |Hess g|_F^2 > hessian_tol.
Singularity classify_singularity(const ProjectiveModel& model, const QPoint& base,
                                 double residual_tol = 1e-9, double hessian_tol = 1e-9);

// Local equation g = prod P_i in the chart of `base`, with normalized curves.
BiPoly local_discriminant(const ProjectiveModel& model, Chart chart);

std::vector<SingularPointReport> singular_points(const ProjectiveModel& model);

// (x, y, z) -> (s x, y / s, z). DomainError for s = 0.
FiberPoint cstar_act(Complex s, const FiberPoint& p);

// Replace the normalized first curve uv + lambda by the reducible curve uv. DomainError when
// the first curve is not of that form.
ProjectiveModel degenerate_first_curve(const ProjectiveModel& model);

// Lift of the real structure to the bundle. Each real curve satisfies
// P(sigma(U, V)) = mu_i conj P(U, V) for a unimodular mu_i; kappa = prod mu_i.
//   Swap:          (x, y, z) -> (k conj y, k conj x, conj z) over (conj V, conj U), k^2 = kappa.
//   AntipodalPair: (x, y, z) -> (k conj y, (kappa / k) conj x, conj z) over the representatives
//                  (-conj V1, conj V0), (-conj U1, conj U0), k^2 = (-1)^n kappa. For n copies
//                  of u - v, kappa = (-1)^n and k = 1.
// Both are involutions. Throws DomainError when a curve is not real for `conv`.
FiberPoint real_structure_lift(const ProjectiveModel& model, RealStructure conv,
                               const FiberPoint& p);

// A point of X over q with x chosen freely: (x, G/x, 1) in canonical representatives.
FiberPoint point_on_model(const ProjectiveModel& model, const QPoint& q, Complex x);

// Max defining residual of real_structure_lift images over `samples` random points of X.
double verify_real_invariance(const ProjectiveModel& model, RealStructure conv,
                              std::size_t samples, std::uint64_t seed = 42);

}  // namespace twistor
