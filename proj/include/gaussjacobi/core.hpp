#pragma once

#include <limits>
#include <numbers>

#include "gaussjacobi/error.hpp"

namespace gaussjacobi {

/// Working scalar. Everything numeric in the library goes through this alias
/// and queries its precision from `std::numeric_limits<Real>`.
using Real = double;

inline constexpr Real kPi = std::numbers::pi_v<Real>;

/// Degree and exponents of the weight (1-x)^alpha (1+x)^beta, plus the two
/// derived quantities used throughout: L = 2n+alpha+beta+1 and the abscissa
/// x_e = (beta^2-alpha^2)/(L^2-1) where the tanh-variable Omega peaks.
struct QuadParams {
  int n = 1;
  Real alpha = 0;
  Real beta = 0;
  Real L = 3;
  Real x_e = 0;

  /// Same degree with alpha and beta exchanged (the mirrored problem x -> -x).
  QuadParams swapped() const;
};

/// Tolerances and iteration caps shared by the solvers.
struct PrecisionConfig {
  Real eps = std::numeric_limits<Real>::epsilon();
  Real fp_tol = 0;      // fixed-point step tolerance
  Real taylor_tol = 0;  // Taylor / continued-fraction term tolerance
  int max_fp_iters = 30;
  int max_taylor_terms = 512;
  int max_cf_terms = 10000;

  /// fp_tol = eps^{3/4}, taylor_tol = eps/4.
  static PrecisionConfig defaults();

  /// Throws ParameterOutOfRange when a field violates its range.
  void validate() const;
};

QuadParams make_params(int n, Real alpha, Real beta);

/// ln Gamma(x) for x > 0.
Real log_gamma(Real x);

/// ln(Gamma(x)/Gamma(y)) for x, y > 0, without forming the two large
/// logarithms when both arguments are large.
Real log_gamma_ratio(Real x, Real y);

/// ln of mu_0 = int_{-1}^{1} (1-x)^alpha (1+x)^beta dx.
Real log_moment0(Real alpha, Real beta);

/// mu_k for k in {0, 1, 2}. Throws Overflow when mu_0 is not representable.
Real moment(Real alpha, Real beta, int k);

/// ln M_{n,alpha,beta}, the constant relating weights to P_n' at the nodes.
Real log_M(const QuadParams& p);

/// ln K_{n,alpha,beta}, the constant of the hypergeometric extreme-weight formula.
Real log_K(const QuadParams& p);

}  // namespace gaussjacobi
