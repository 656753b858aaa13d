#include <cmath>

#include "doctest.h"
#include "test_support.hpp"
#include "twistor/errors.hpp"
#include "twistor/sampling.hpp"

using namespace twistor;
using twistor::test::close;
using twistor::test::same_point;

namespace {

// Plain Moebius evaluation, written independently of SU2Element.
Complex mobius(Complex alpha, Complex beta, Complex u) {
  return (alpha * u + beta) / (-std::conj(beta) * u + std::conj(alpha));
}

const SpherePoint kInf = SpherePoint::infinity();

}  // namespace

TEST_CASE("sphere point canonical form") {
  const SpherePoint p(Complex(2.0, 0.0), Complex(0.0, 4.0));
  CHECK(p.z1() == Complex(1.0));
  CHECK(close(p.z0(), Complex(0.0, -0.5)));
  const SpherePoint q(Complex(0.0, 4.0), Complex(2.0, 0.0));
  CHECK(q.z0() == Complex(1.0));
  CHECK(q.in_affine_chart() == false);
  // ties go to z1
  CHECK(SpherePoint(1.0, Complex(0.0, 1.0)).z1() == Complex(1.0));
  CHECK(kInf.is_infinity());
  CHECK_THROWS_AS(SpherePoint(0.0, 0.0), DegenerateInputError);
  CHECK_THROWS_AS(SpherePoint(std::nan(""), 1.0), DegenerateInputError);
}

TEST_CASE("chordal distance is chart independent and bounded") {
  CHECK(chordal_distance(SpherePoint::affine(0.0), kInf) == doctest::Approx(1.0));
  CHECK(chordal_distance(SpherePoint::affine(1.0), SpherePoint::affine(-1.0)) ==
        doctest::Approx(1.0));
  const SpherePoint a(Complex(3.0, 1.0), 2.0);
  const SpherePoint b(Complex(-1.0, 0.5), Complex(0.2, 0.1));
  CHECK(chordal_distance(a, b) == doctest::Approx(chordal_distance(b, a)));
  CHECK(chordal_distance(a, a) == 0.0);
}

TEST_CASE("sigma_q examples") {
  const QPoint p{SpherePoint::affine(Complex(0, 2)), SpherePoint::affine(3.0)};
  const QPoint s = sigma_q(RealStructure::Swap, p);
  CHECK(same_point(s.u, SpherePoint::affine(3.0)));
  CHECK(same_point(s.v, SpherePoint::affine(Complex(0, -2))));

  const QPoint q{SpherePoint::affine(0.0), SpherePoint::affine(1.0)};
  const QPoint a = sigma_q(RealStructure::AntipodalPair, q);
  CHECK(same_point(a.u, SpherePoint::affine(-1.0)));
  CHECK(a.v.is_infinity());

  CHECK_THROWS_AS(sigma_q(RealStructure::Cp3Family, q), DomainError);
}

TEST_CASE("real structures are involutions, including points at infinity") {
  for (std::size_t i = 0; i < 200; ++i) {
    Sampler rng(1, "involution", i);
    QPoint p = rng.q_point();
    if (i % 10 == 0) p.u = kInf;
    if (i % 15 == 0) p.v = kInf;
    for (auto conv : {RealStructure::Swap, RealStructure::AntipodalPair}) {
      CHECK(same_point(sigma_q(conv, sigma_q(conv, p)), p));
    }
    const CP3Point x({rng.uniform_box(1), rng.uniform_box(1), rng.uniform_box(1), rng.uniform_box(1)});
    const Complex s = rng.uniform_box(1);
    const auto once = sigma_cp3(x, s);
    const auto twice = sigma_cp3(once.first, once.second);
    CHECK(fs_distance(twice.first, x) < 1e-12);
    CHECK(twice.second == s);
  }
}

TEST_CASE("sigma_cp3 examples") {
  const auto v = sigma_cp3(CP3Point({1.0, 0.0, 0.0, 0.0}), Complex(0, 1));
  CHECK(fs_distance(v.first, CP3Point({1.0, 0.0, 0.0, 0.0})) == 0.0);
  CHECK(v.second == Complex(0, -1));
  const auto w = sigma_cp3(CP3Point({0.0, 0.0, 1.0, 0.0}), 1.0);
  CHECK(fs_distance(w.first, CP3Point({0.0, 0.0, 0.0, 1.0})) == 0.0);
}

TEST_CASE("swap fixed locus is v = conj u") {
  for (std::size_t i = 0; i < 100; ++i) {
    Sampler rng(2, "swap-fixed", i);
    const SpherePoint u = rng.sphere_point();
    const QPoint on{u, SpherePoint(std::conj(u.z0()), std::conj(u.z1()))};
    CHECK(same_point(sigma_q(RealStructure::Swap, on), on));
    const QPoint off{u, SpherePoint(std::conj(u.z0()) + 0.1, std::conj(u.z1()))};
    CHECK(chordal_distance(sigma_q(RealStructure::Swap, off), off) > 1e-3);
  }
}

TEST_CASE("antipodal pair map: fixed locus is v = -1/conj u, componentwise antipode is free") {
  // The pair map (u, v) -> (-1/conj v, -1/conj u) fixes {v = -1/conj u}; what is fixed-point
  // free is the antipode on each factor.
  double min_antipode = 1.0;
  for (std::size_t i = 0; i < 10000; ++i) {
    Sampler rng(3, "antipode", i);
    const SpherePoint u = rng.sphere_point();
    min_antipode = std::min(min_antipode, chordal_distance(u, antipode(u)));
    if (i < 200) {
      const QPoint fixed{u, antipode(u)};
      CHECK(same_point(sigma_q(RealStructure::AntipodalPair, fixed), fixed));
    }
  }
  CHECK(min_antipode == doctest::Approx(1.0));
}

TEST_CASE("su2 examples") {
  const SU2Element id;
  const QPoint p{SpherePoint::affine(Complex(0.3, 1)), kInf};
  CHECK(same_point(su2_apply(id, p), p));

  const double h = 1.0 / std::sqrt(2.0);
  const SU2Element g(h, Complex(0, -h));
  const QPoint q{SpherePoint::affine(Complex(0, 1)), SpherePoint::affine(2.0)};
  const QPoint gq = su2_apply(g, q);
  CHECK(close(gq.u.value(), 0.0));
  CHECK(close(gq.v.value(), Complex(4.0, 3.0) / 5.0));
  CHECK(close(gq.v.value(), mobius(h, Complex(0, -h), 2.0)));

  const SU2Element r = su2_reduce_to_axis(q);
  CHECK(close(r.alpha(), h));
  CHECK(close(r.beta(), Complex(0, -h)));
  CHECK(same_point(su2_reduce_to_axis(QPoint{SpherePoint::affine(0.0), kInf}).apply(kInf), kInf));

  CHECK_THROWS_AS(SU2Element(1.0, 0.1), DomainError);
}

TEST_CASE("su2 is a group action commuting with the antipodal real structure") {
  for (std::size_t i = 0; i < 100; ++i) {
    Sampler rng(4, "su2", i);
    auto random_g = [&] {
      const Complex a = rng.uniform_box(1), b = rng.uniform_box(1);
      const double n = std::hypot(std::abs(a), std::abs(b));
      return SU2Element(a / n, b / n);
    };
    const SU2Element g1 = random_g(), g2 = random_g();
    QPoint p = rng.q_point();
    if (i % 7 == 0) p.u = kInf;
    CHECK(same_point(su2_apply(g1, su2_apply(g2, p)), su2_apply(g1 * g2, p)));
    CHECK(same_point(sigma_q(RealStructure::AntipodalPair, su2_apply(g1, p)),
                     su2_apply(g1, sigma_q(RealStructure::AntipodalPair, p))));
    if (p.u.in_affine_chart()) {
      CHECK(close(g1.apply(p.u).value(), mobius(g1.alpha(), g1.beta(), p.u.value()), 1e-9));
    }
    // reduce to axis
    const SU2Element r = su2_reduce_to_axis(p);
    CHECK(std::abs(r.apply(p.u).value()) < 1e-12);
    CHECK(same_point(r.inverse().apply(r.apply(p.v)), p.v));
  }
}

TEST_CASE("fs distance resolves tiny separations") {
  const std::array<Complex, 3> a{1.0, 0.5, 0.25};
  std::array<Complex, 3> b = a;
  b[1] += 1e-13;
  const double d = fs_distance(a, b);
  CHECK(d > 1e-14);
  CHECK(d < 1e-12);
  CHECK(fs_distance(a, a) == 0.0);
  const std::array<Complex, 3> scaled{a[0] * Complex(0, 3), a[1] * Complex(0, 3), a[2] * Complex(0, 3)};
  CHECK(fs_distance(a, scaled) < 1e-15);
}
