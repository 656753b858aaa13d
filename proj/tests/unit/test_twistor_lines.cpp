#include <cmath>

#include "doctest.h"
#include "test_support.hpp"
#include "twistor/errors.hpp"
#include "twistor/sampling.hpp"
#include "twistor/twistor_lines.hpp"

using namespace twistor;
using twistor::test::close;
using twistor::test::same_point;

namespace {

const SpherePoint kInf = SpherePoint::infinity();

SpherePoint pt(Complex z) { return SpherePoint::affine(z); }
QPoint q(Complex u, Complex v) { return {pt(u), pt(v)}; }

}  // namespace

TEST_CASE("minitwistor curve examples") {
  const double r = 0.3;
  const Complex t(0.4, -0.7);
  const QPoint a = minitwistor_curve_eval(pt(0), r, pt(t));
  CHECK(close(a.u.value(), -r * t));
  CHECK(close(a.v.value(), -t / r));
  CHECK(same_point(minitwistor_curve_eval(pt(0), r, pt(0)), q(0, 0)));
  CHECK(same_point(minitwistor_curve_eval(kInf, 0.5, pt(1)), q(2, 0.5)));
  // through (0, 0) iff d = 0 or d = infinity
  CHECK(same_point(minitwistor_curve_eval(kInf, 0.5, kInf), q(0, 0)));
  CHECK(std::abs(minitwistor_curve(pt(0.3), 0.5).d) > 1e-3);
}

TEST_CASE("u - v closed form and implicit equation") {
  for (std::size_t i = 0; i < 200; ++i) {
    Sampler rng(20, "u-v", i);
    const Complex d = rng.uniform_box(2);
    const double r = rng.uniform(0.05, 0.95);
    const Complex t = rng.uniform_box(2);
    const QPoint p = minitwistor_curve_eval(pt(d), r, pt(t));
    if (!p.u.in_affine_chart() || !p.v.in_affine_chart()) continue;
    const Complex expect = (1 + std::norm(d)) * (1 - r * r) * t /
                           ((1.0 + r * std::conj(d) * t) * (r + std::conj(d) * t));
    CHECK(std::abs(p.u.value() - p.v.value() - expect) <= 1e-9 * (1 + std::abs(expect)));
    const OneOneCurve k = minitwistor_curve(pt(d), r);
    CHECK(std::abs(k.eval(p)) <= 1e-12 * k.scale());
    // C(d, r) is a real curve for the antipodal pair map
    CHECK(k.is_antipodal_real(1e-10));
    CHECK(same_point(minitwistor_curve_eval(pt(d), r, curve_parameter(pt(d), r, p)), p, 1e-10));
  }
}

TEST_CASE("f and g") {
  CHECK(f_r(2, 0.5) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(g_a(2, 1.0, -0.5) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK_THROWS_AS(f_r(2, 0.0), DomainError);
  CHECK_THROWS_AS(f_r(2, 1.0), DomainError);
  CHECK_THROWS_AS(g_a(2, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(g_a(2, 1.0, -1.0), DomainError);
  for (int n = 1; n <= 6; ++n) {
    double prev_f = INFINITY, prev_g = INFINITY;
    for (int k = 1; k < 1000; ++k) {
      const double f = f_r(n, k / 1000.0);
      const double g = g_a(n, 0.7, -1.0 + k / 1000.0);
      CHECK(f < prev_f);
      CHECK(g < prev_g);
      prev_f = f;
      prev_g = g;
    }
  }
  CHECK(f_r(3, 1e-8) > 1e7);
  CHECK(f_r(3, 1 - 1e-8) < 1e-10);
}

TEST_CASE("line_eval examples") {
  for (int n = 1; n <= 4; ++n) {
    const CoincidentModel m(n);
    const double r = 0.4;
    const FiberPoint p = line_eval(m, {pt(0), r, 1.0}, pt(0));
    CHECK(same_point(p.base(), q(0, 0)));
    const double eta = std::pow(1 - r * r, n / 2.0) / r;
    const FiberPoint expect(q(0, 0), {0.0, eta, 1.0});
    CHECK(point_distance(p, expect, m.bidegrees()) < 1e-14);
  }
  CHECK_THROWS_AS(CoincidentModel(0), DomainError);
  CHECK_THROWS_AS((TwistorLineParams{pt(0), 1.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((TwistorLineParams{pt(0), 0.5, 1.1}.validate()), DomainError);
}

TEST_CASE("lines lie on X_0, including t = infinity and d = infinity") {
  for (int n = 1; n <= 6; ++n) {
    const CoincidentModel m(n);
    const auto model = m.model();
    for (std::size_t i = 0; i < 200; ++i) {
      TwistorLineParams L = random_line_params(21, i);
      if (i % 20 == 0) L.d = kInf;
      Sampler rng(22, "t", i);
      const SpherePoint t = i % 9 == 0 ? kInf : (i % 11 == 0 ? pt(0) : rng.sphere_point());
      CHECK(defining_residual(model, line_eval(m, L, t)) < 1e-9);
    }
  }
}

TEST_CASE("lines are real and avoid L_infinity") {
  for (std::size_t i = 0; i < 100; ++i) {
    const CoincidentModel m(1 + static_cast<int>(i % 5));
    TwistorLineParams L = random_line_params(23, i);
    if (i % 10 == 0) L.d = kInf;
    double to_linf = 1.0;
    for (const auto& t : sphere_lattice(200)) {
      to_linf = std::min(to_linf, distance_to_l_infinity(line_eval(m, L, t)));
    }
    CHECK(to_linf > 1e-3);
    Sampler rng(24, "t", i);
    CHECK(line_reality_defect(m, L, rng.sphere_point()) < 1e-10);
  }
  // a non unimodular phase is not a real line and is rejected
  const CoincidentModel m(2);
  CHECK_THROWS_AS(line_reality_defect(m, {pt(0.2), 0.5, 1.5}, pt(0.3)), DomainError);
}

TEST_CASE("solve line: worked examples") {
  const CoincidentModel m(2);
  {
    const double xi = std::sqrt(1.5);
    const FiberPoint p(q(0, 1), {xi, 1.0 / xi, 1.0});
    const auto s = solve_line_through_point(m, p);
    CHECK(s.branch == "generic");
    CHECK(close(s.params.d.value(), -0.5, 1e-10));
    CHECK(s.params.r == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-10));
    CHECK(s.c_modulus_error < 1e-8);
    CHECK(distance_to_line(m, s.params, p) < 1e-10);
  }
  {
    const FiberPoint p(q(0, 0), {0.0, 1.5, 1.0});
    const auto s = solve_line_through_point(m, p);
    CHECK(s.branch == "d=0");
    CHECK(std::abs(s.params.d.value()) < 1e-12);
    CHECK(s.params.r == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(close(s.params.c, 1.0, 1e-10));
  }
  {
    // d = infinity branch over (0,0): eta = 0
    const TwistorLineParams L{kInf, 0.3, Complex(0.6, 0.8)};
    const FiberPoint p = line_eval(m, L, kInf);
    CHECK(same_point(p.base(), q(0, 0)));
    const auto s = solve_line_through_point(m, p);
    CHECK(s.branch == "d=inf");
    CHECK(line_hausdorff(m, s.params, L) < 1e-9);
  }
}

TEST_CASE("solve line: excluded loci") {
  const CoincidentModel m(2);
  auto locus = [&](const FiberPoint& p) {
    try {
      solve_line_through_point(m, p);
    } catch (const NoLineError& e) {
      return e.locus();
    }
    return std::string("none");
  };
  CHECK(locus(FiberPoint(q(0, 1), {2.0, 2.0, 1.0})) == "not-on-model");
  CHECK(locus(FiberPoint(q(0, 1), {0.0, 1.0, 0.0})) == "E");
  CHECK(locus(FiberPoint(q(0, 1), {1.0, 0.0, 0.0})) == "E-bar");
  CHECK(locus(FiberPoint(q(0.5, 0.5), {0.0, 0.0, 1.0})) == "L-infinity");
  // over the sigma-fixed locus v = -1/conj u
  CHECK(locus(point_on_model(m.model(), {pt(0.5), antipode(pt(0.5))}, 2.0)) == "real-base");
}

TEST_CASE("solve line round trip") {
  for (int n = 1; n <= 5; ++n) {
    const CoincidentModel m(n);
    for (std::size_t i = 0; i < 100; ++i) {
      const TwistorLineParams L = random_line_params(25 + n, i);
      Sampler rng(26, "t", i);
      const FiberPoint p = line_eval(m, L, rng.sphere_point());
      const auto s = solve_line_through_point(m, p);
      CHECK(s.c_modulus_error < 1e-8);
      CHECK(line_hausdorff(m, s.params, L) < 1e-7);
    }
  }
}

TEST_CASE("foliation: distinct lines are disjoint") {
  const CoincidentModel m(2);
  const TwistorLineParams L{pt(0.3), 0.4, 1.0};
  CHECK(foliation_disjointness(m, L, L, 50) < 1e-12);
  TwistorLineParams phase = L;
  phase.c = Complex(0, 1);
  CHECK(foliation_disjointness(m, L, phase, 100) > 1e-6);
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(foliation_disjointness(m, random_line_params(27, 2 * i), random_line_params(27, 2 * i + 1),
                                 100) > 1e-6);
  }
}

TEST_CASE("X_0 has no real point") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(no_real_point_check(CoincidentModel(n), 1000, 7) > 0.05);
  }
  // the unit circle part of the cstar action commutes with the real structure
  const CoincidentModel m(2);
  const auto model = m.model();
  for (std::size_t i = 0; i < 50; ++i) {
    Sampler rng(28, "cstar", i);
    const SpherePoint u = rng.sphere_point();
    const FiberPoint p = point_on_model(model, {u, antipode(u)}, rng.log_uniform_polar(0.2, 5));
    const double base = real_point_distance(m, p);
    CHECK(base > 0.05);
    const Complex s = rng.unit_phase();
    CHECK(std::abs(real_point_distance(m, cstar_act(s, p)) - base) < 1e-8);
  }
}
