#include <doctest.h>

#include <cmath>
#include <vector>

#include "gaussjacobi/error.hpp"
#include "gaussjacobi/odekernel.hpp"
#include "helpers.hpp"

using namespace gaussjacobi;
using gjtest::kEps;
using gjtest::rel;

TEST_CASE("omega for each transform") {
  const QuadParams leg = make_params(1, 0, 0);
  CHECK(rel(omega(Transform::TanhR, leg, 0), 2) <= kEps);
  CHECK(rel(omega_tanh(leg, 0), 2) <= kEps);
  CHECK(rel(omega(Transform::Trivial, leg, 0), 3) <= kEps);
  const QuadParams cheb = make_params(1, -0.5, -0.5);
  for (Real t : {0.1, 1.0, 2.9}) CHECK(rel(omega(Transform::Angular, cheb, t), 1) <= 4 * kEps);
}

TEST_CASE("taylor_coeffs, Legendre n=1 at 0") {
  const std::vector<Real> a = taylor_coeffs(make_params(1, 0, 0), {0, 0, 1}, 6);
  REQUIRE(a.size() >= 4);
  CHECK(a[0] == 0);
  CHECK(a[1] == 1);
  CHECK(std::abs(a[2]) <= kEps);
  CHECK(rel(a[3], -0.5) <= 4 * kEps);
}

TEST_CASE("taylor_coeffs, Chebyshev T6 at 0.2") {
  // (1-x^2)^(1/4) T_6(x): Taylor coefficients at 0.2, 40-digit reference.
  const Real ref[] = {-0.35114999036523290098, 5.70388430080924787,   6.6812229612134970905,
                      -35.227558742617770138,  -27.498303834477480258, 48.76131141516705254,
                      37.015500170501066519,   -8.2177425957601306575, -6.6802616687685820188,
                      -2.978269835079383669,   -2.6207400664558644092, -1.962941047757973219,
                      -1.8479945077327164581};
  const std::vector<Real> a = taylor_coeffs(make_params(6, -0.5, -0.5), {0.2, ref[0], ref[1]}, 13);
  REQUIRE(a.size() >= 13);
  for (int j = 0; j <= 12; ++j) CHECK(rel(a[j], ref[j]) <= 1e-10);
}

TEST_CASE("taylor_step examples") {
  const QuadParams leg = make_params(1, 0, 0);
  const TaylorResult id = taylor_step(leg, {0.1, 0.3, -0.7}, 0);
  CHECK(id.y == 0.3);
  CHECK(id.yp == -0.7);
  CHECK(id.terms == 1);

  const TaylorResult r = taylor_step(leg, {0, 0, 1}, 0.5);
  CHECK(rel(r.y, 0.4330127018922193) <= 1e3 * kEps);
  CHECK(rel(r.yp, 0.5773502691896258) <= 1e3 * kEps);

  // Y~ = (1-x^2)^(1/4) T_6(x): Y~(0) = -1, Y~'(0) = 0.
  const TaylorResult c = taylor_step(make_params(6, -0.5, -0.5), {0, -1, 0}, 0.3);
  CHECK(rel(c.y, 0.24859701697720118088) <= 1e3 * kEps);
  CHECK(rel(c.yp, 5.8998473360889020786) <= 1e3 * kEps);
}

TEST_CASE("taylor_step rejects steps outside the disc") {
  CHECK_THROWS_AS(taylor_step(make_params(3, 0, 0), {0.5, 1, 0}, 0.6), Error);
}

TEST_CASE("composition and reversibility") {
  const QuadParams p = make_params(12, 0.4, -0.3);
  const TaylorSeed s{0.1, 0.8, -1.7};
  const TaylorResult one = taylor_step(p, s, 0.3);
  const TaylorResult mid = taylor_step(p, s, 0.1);
  const TaylorResult two = taylor_step(p, {0.2, mid.y, mid.yp}, 0.2);
  CHECK(rel(two.y, one.y) <= 1e3 * kEps);
  CHECK(rel(two.yp, one.yp) <= 1e3 * kEps);

  const TaylorResult back = taylor_step(p, {0.4, one.y, one.yp}, -0.3);
  CHECK(rel(back.y, s.y) <= 1e3 * kEps);
  CHECK(rel(back.yp, s.yp) <= 1e3 * kEps);
}

TEST_CASE("taylor_march reaches far targets") {
  // Legendre n=1: Y~ = x sqrt(1-x^2)
  const TaylorResult r = taylor_march(make_params(1, 0, 0), {0, 0, 1}, 0.95);
  const Real u = (1 - 0.95) * (1 + 0.95);
  CHECK(rel(r.y, 0.95 * std::sqrt(u)) <= 1e3 * kEps);
  CHECK(rel(r.yp, std::sqrt(u) - 0.95 * 0.95 / std::sqrt(u)) <= 1e3 * kEps);
}

TEST_CASE("growth_diagnostic") {
  const std::vector<Real> a = taylor_coeffs(make_params(10, 0, 0), {0.5, 1, 0.3}, 64);
  CHECK(growth_diagnostic(a, 0.5) == doctest::Approx(2).epsilon(0.25));

  const std::vector<Real> b = taylor_coeffs(make_params(10, 1, 0.5), {-0.5, 1, 0.3}, 64);
  CHECK(growth_diagnostic(b, -0.5) == doctest::Approx(2).epsilon(0.25));

  // alpha = beta = 1: Y~ = (1-x^2) P_4^{(1,1)}, a polynomial of degree 6.
  const QuadParams p = make_params(4, 1, 1);
  const long double x = 0.3L;
  const long double P = gjtest::jacobi_p(4, 1, 1, x);
  const long double dP = 3.5L * gjtest::jacobi_p(3, 2, 2, x);
  const Real y = static_cast<Real>((1 - x * x) * P);
  const Real yp = static_cast<Real>(-2 * x * P + (1 - x * x) * dP);
  const std::vector<Real> c = taylor_coeffs(p, {0.3, y, yp}, 40);
  CHECK(growth_diagnostic(c, 0.3) < 0.5 / 0.7);
}
