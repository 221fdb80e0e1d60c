#include <doctest.h>

#include <cmath>
#include <vector>

#include "gaussjacobi/error.hpp"
#include "gaussjacobi/gegenbauer.hpp"
#include "gaussjacobi/oracle.hpp"
#include "helpers.hpp"

using namespace gaussjacobi;
using gjtest::kEps;
using gjtest::rel;

TEST_CASE("single node") {
  const SymmetricRule r = gegenbauer_rule(1, 2.5);
  REQUIRE(r.nodes.size() == 1);
  CHECK(r.nodes[0] == 0);
  CHECK(rel(r.weights[0], moment(2.5, 2.5, 0)) <= 4 * kEps);
}

TEST_CASE("Chebyshev n=4") {
  const SymmetricRule r = gegenbauer_rule(4, -0.5);
  REQUIRE(r.nodes.size() == 4);
  const Real ref[] = {-std::cos(kPi / 8), -std::cos(3 * kPi / 8), std::cos(3 * kPi / 8), std::cos(kPi / 8)};
  for (int i = 0; i < 4; ++i) {
    CHECK(rel(r.nodes[i], ref[i]) <= 4 * kEps);
    CHECK(rel(r.weights[i], kPi / 4) <= 8 * kEps);
  }
}

TEST_CASE("nodes are exactly symmetric") {
  for (int n : {7, 12, 101}) {
    const SymmetricRule r = gegenbauer_rule(n, 1.25);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      CHECK(r.nodes[i] == -r.nodes[r.nodes.size() - 1 - i]);
      CHECK(r.weights[i] == r.weights[r.nodes.size() - 1 - i]);
    }
    if (n % 2) CHECK(r.nodes[static_cast<std::size_t>(n / 2)] == 0);
  }
}

TEST_CASE("n=20, lambda=3 against Golub-Welsch") {
  const QuadratureRule a = gegenbauer_rule(20, 3).as_rule();
  const QuadratureRule b = golub_welsch(make_params(20, 3, 3));
  const RuleComparison c = compare_rules(a, b);
  CHECK(c.eps_mr_nodes <= 1e-13);
  CHECK(c.eps_rm_weights <= 1e-12);
}

TEST_CASE("normalize_symmetric, scale invariance") {
  const std::vector<Real> x{1 / std::sqrt(3.0)};
  for (Real c : {1e-200, 0.37, 5.0, 1e250}) {
    const std::vector<Real> s{c};
    const SymmetricWeights w = normalize_symmetric(x, s, 0, false, false);
    CHECK(rel(w.weights[0], 1) <= 4 * kEps);
    CHECK(rel(w.gamma, 1 / c) <= 4 * kEps);
  }
}

TEST_CASE("normalize_symmetric, Legendre n=3") {
  const std::vector<Real> x{0, std::sqrt(0.6)};
  const std::vector<Real> s{8.0 / 9 * 3.1, 5.0 / 9 * 3.1};
  const SymmetricWeights w = normalize_symmetric(x, s, 0, true, false);
  CHECK(rel(w.weights[0], 8.0 / 9) <= 8 * kEps);
  CHECK(rel(w.weights[1], 5.0 / 9) <= 8 * kEps);

  std::vector<Real> ls;
  for (Real v : s) ls.push_back(std::log(v));
  const SymmetricWeights l = normalize_symmetric_log(x, ls, 0, true, false);
  CHECK(rel(l.weights[0], 8.0 / 9) <= 16 * kEps);
  CHECK(rel(l.weights[1], 5.0 / 9) <= 16 * kEps);
}

TEST_CASE("last-weight correction recovers a withheld weight") {
  const Real lambda = -0.8;
  for (int n : {6, 7}) {
    const QuadratureRule g = golub_welsch(make_params(n, lambda, lambda));
    const bool odd = n % 2 == 1;
    std::vector<Real> x, s;
    for (int i = n / 2; i < n; ++i) {
      const Real xi = odd && i == n / 2 ? 0 : g.nodes[i];
      x.push_back(xi);
      s.push_back(2.5 * g.weights[i] / std::pow((1 - xi) * (1 + xi), lambda));
    }
    const Real withheld = g.weights[n - 1];
    s.back() *= 1.37;  // spoiled
    for (bool logs : {false, true}) {
      std::vector<Real> ls;
      for (Real v : s) ls.push_back(std::log(v));
      const SymmetricWeights w =
          logs ? normalize_symmetric_log(x, ls, lambda, odd, true) : normalize_symmetric(x, s, lambda, odd, true);
      CHECK(rel(w.weights.back(), withheld) <= 1e-13);
      for (std::size_t i = 0; i + 1 < x.size(); ++i) CHECK(rel(w.weights[i], g.weights[n / 2 + i]) <= 1e-13);
    }
  }
}

TEST_CASE("normalize_symmetric input checks") {
  const std::vector<Real> x{0.2, 0.5}, s{1};
  CHECK_THROWS_AS(normalize_symmetric(x, s, 0, false, false), Error);
  const std::vector<Real> s2{1, 1};
  CHECK_THROWS_AS(normalize_symmetric(x, s2, 0, true, false), Error);
}

TEST_CASE("correction is applied only below -1/2") {
  CHECK(gegenbauer_rule(40, -0.9).corrected_last);
  CHECK_FALSE(gegenbauer_rule(40, -0.4).corrected_last);
  CHECK_FALSE(gegenbauer_rule(40, -0.9, PrecisionConfig::defaults(), false).corrected_last);
}

TEST_CASE("large lambda keeps logs finite") {
  const SymmetricRule r = gegenbauer_rule(2000, 150);
  for (Real lw : r.log_weights) CHECK(std::isfinite(lw));
  CHECK(r.flushed_underflow > 0);
}
