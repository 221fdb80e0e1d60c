#pragma once

#include <vector>

#include "gaussjacobi/core.hpp"
#include "gaussjacobi/rule.hpp"

namespace gaussjacobi {

/// Symmetric tridiagonal matrix of the monic Jacobi recurrence.
struct TridiagonalJacobiMatrix {
  std::vector<Real> diag;     // d_1..d_n
  std::vector<Real> offdiag;  // e_1..e_{n-1}, all > 0
  Real mu0 = 0;
};

TridiagonalJacobiMatrix jacobi_matrix(const QuadParams& p);

/// Largest degree golub_welsch accepts.
inline constexpr int kOracleMaxDegree = 10000;

/// Reference rule from the eigen-decomposition of the Jacobi matrix
/// (implicit QL with Wilkinson shifts, carried out in long double).
QuadratureRule golub_welsch(const QuadParams& p);

/// Exact monomial moments mu_0..mu_kmax of the weight.
std::vector<long double> monomial_moments(Real alpha, Real beta, int kmax);

/// max_{k <= kmax} |sum w_i x_i^k - mu_k| / sum w_i |x_i|^k.
Real exactness_check(const QuadratureRule& rule, const QuadParams& p, int kmax);

struct RuleComparison {
  Real eps_mr_nodes = 0;
  Real eps_rm_weights = 0;
  Real eps_mr_weights = 0;
};

/// Errors of `a` measured against the reference `b`.
RuleComparison compare_rules(const QuadratureRule& a, const QuadratureRule& b);

}  // namespace gaussjacobi
