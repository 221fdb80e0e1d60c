#pragma once

#include "gaussjacobi/core.hpp"

namespace gaussjacobi {

// Jacobi polynomial ratios and logarithmic derivatives that do not go through
// Taylor series: the three-term recurrence in ratio form and the continued
// fraction in the alpha direction. These functions accept n = 0 in a
// hand-built QuadParams where that degenerate case is meaningful.

struct RatioResult {
  Real value = 0;
  int terms_used = 0;
  bool converged = false;
};

/// P_n(x) / P_{n-1}(x) by the upward ratio recurrence. At an interior zero
/// of P_{n-1} the result is a signed infinity; a zero of P_n gives a signed 0.
Real ratio_ttrr(const QuadParams& p, Real x);

/// Y~'(x)/Y~(x) for Y~ = (1-x)^{(a+1)/2} (1+x)^{(b+1)/2} P_n(x). Returns a
/// signed infinity when x is a zero of P_n.
Real log_deriv_tilde(const QuadParams& p, Real x);

/// H = P_n^{(a+1,b)}(x) / P_n^{(a,b)}(x) by the alpha-direction continued
/// fraction (modified Lentz). Throws NoConvergence at cfg.max_cf_terms.
RatioResult cf_ratio_alpha(const QuadParams& p, Real x,
                           const PrecisionConfig& cfg = PrecisionConfig::defaults());

/// Same ratio with 1-x supplied directly, so callers holding 2 sin^2(theta/2)
/// keep full relative accuracy near x = 1.
RatioResult cf_ratio_alpha_gap(const QuadParams& p, Real one_minus_x,
                               const PrecisionConfig& cfg = PrecisionConfig::defaults());

/// h(theta) with 1/h = sin(theta) Ydot(theta)/Y(theta) for the angular-variable
/// function Y = (1-x)^{(a+1/2)/2} (1+x)^{(b+1/2)/2} P_n(cos theta).
/// Signed infinity when the derivative vanishes.
Real h_theta(const QuadParams& p, Real theta,
             const PrecisionConfig& cfg = PrecisionConfig::defaults());

/// 2F1(-n+1, n+a+b+2; a+2; s2), summed term by term (n terms).
Real terminating_2f1(const QuadParams& p, Real s2);

/// The same polynomial, P_{n-1}^{(a+1,b+1)}(1-2 s2) / P_{n-1}^{(a+1,b+1)}(1),
/// from the degree recurrence run on successive differences. The series
/// cancels badly once n^2 s2 is large; this form does not.
Real terminating_2f1_recurrence(const QuadParams& p, Real s2);

}  // namespace gaussjacobi
