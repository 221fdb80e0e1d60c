#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "gaussjacobi/gegenbauer.hpp"
#include "gaussjacobi/jacobi.hpp"
#include "gaussjacobi/oracle.hpp"
#include "helpers.hpp"

using namespace gaussjacobi;
using gjtest::kEps;
using gjtest::rel;

namespace {

struct Case {
  int n;
  Real a, b;
};

std::vector<Case> random_cases(unsigned seed, int count, int nmax, Real pmax) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> nd(2, nmax);
  std::uniform_real_distribution<Real> pd(-0.99, pmax);
  std::vector<Case> v;
  for (int i = 0; i < count; ++i) v.push_back({nd(gen), pd(gen), pd(gen)});
  return v;
}

}  // namespace

TEST_CASE("rules are ordered, inside (-1,1), positive and carry mu_0") {
  for (const Case& c : random_cases(7, 60, 300, 8)) {
    CAPTURE(c.n);
    CAPTURE(c.a);
    CAPTURE(c.b);
    const QuadratureRule r = jacobi_rule(c.n, c.a, c.b);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(c.n));
    CHECK(r.nodes.front() > -1);
    CHECK(r.nodes.back() < 1);
    for (int i = 1; i < c.n; ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
    for (int i = 0; i < c.n; ++i) {
      CHECK(r.weights[i] > 0);
      CHECK(rel(std::exp(r.log_weights[i]), r.weights[i]) <= 1e3 * kEps);
    }
    const long double mass = std::accumulate(r.weights.begin(), r.weights.end(), 0.0L);
    CHECK(rel(static_cast<Real>(mass), moment(c.a, c.b, 0)) <= 8 * c.n * kEps);
  }
}

TEST_CASE("agreement with Golub-Welsch") {
  for (const Case& c : random_cases(11, 40, 200, 5)) {
    CAPTURE(c.n);
    CAPTURE(c.a);
    CAPTURE(c.b);
    const RuleComparison d = compare_rules(jacobi_rule(c.n, c.a, c.b), golub_welsch(make_params(c.n, c.a, c.b)));
    CHECK(d.eps_rm_weights <= 1e-13);
    CHECK(d.eps_mr_weights <= 1e-12);
  }
}

TEST_CASE("exactness through degree 2n-1") {
  for (const Case& c : random_cases(3, 30, 25, 4)) {
    CAPTURE(c.n);
    CAPTURE(c.a);
    CAPTURE(c.b);
    const QuadratureRule r = jacobi_rule(c.n, c.a, c.b);
    CHECK(exactness_check(r, r.params, 2 * c.n - 1) <= 1e-11);
  }
}

TEST_CASE("reflection symmetry") {
  for (const Case& c : random_cases(5, 25, 400, 6)) {
    CAPTURE(c.n);
    const QuadratureRule r = jacobi_rule(c.n, c.a, c.b);
    const QuadratureRule s = jacobi_rule(c.n, c.b, c.a);
    for (int i = 0; i < c.n; ++i) {
      CHECK(r.nodes[i] == -s.nodes[c.n - 1 - i]);
      CHECK(rel(r.weights[i], s.weights[c.n - 1 - i]) <= 1e2 * kEps);
    }
  }
}

TEST_CASE("nodes interlace between consecutive degrees") {
  for (int n : {5, 31, 200}) {
    const QuadratureRule a = jacobi_rule(n, -0.3, 1.9);
    const QuadratureRule b = jacobi_rule(n + 1, -0.3, 1.9);
    for (int i = 0; i < n; ++i) {
      CHECK(b.nodes[i] < a.nodes[i]);
      CHECK(a.nodes[i] < b.nodes[i + 1]);
    }
  }
}

TEST_CASE("Chebyshev second kind closed form") {
  // lambda = 1/2: x_k = cos(k pi/(n+1)), w_k = pi/(n+1) sin^2(k pi/(n+1))
  const int n = 500;
  const SymmetricRule r = gegenbauer_rule(n, 0.5);
  for (int k = 1; k <= n; ++k) {
    const int m = std::min(k, n + 1 - k);
    const Real s = std::sin(m * kPi / (n + 1));
    const Real x = -std::cos(k * kPi / (n + 1));
    CHECK(std::abs(r.nodes[k - 1] - x) <= 4 * kEps);
    CHECK(rel(r.weights[k - 1], kPi / (n + 1) * s * s) <= 1e-13);
  }
}

TEST_CASE("iteration counts stay small") {
  const QuadratureRule r = jacobi_rule(5000, 0.3, 1.7);
  CHECK(r.stats.mean_iters <= 3.5);
  CHECK(r.stats.max_iters <= 10);
}
