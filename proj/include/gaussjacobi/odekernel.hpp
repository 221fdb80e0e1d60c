#pragma once

#include <span>
#include <vector>

#include "gaussjacobi/core.hpp"

namespace gaussjacobi {

/// Liouville transforms of the Jacobi equation to normal form Y'' + Omega Y = 0:
/// Trivial (z = x), Angular (x = cos theta) and TanhR (x = tanh z).
enum class Transform { Trivial, Angular, TanhR };

/// Expansion center x with the values of Y~ and Y~' there.
struct TaylorSeed {
  Real x = 0;
  Real y = 0;
  Real yp = 0;
};

struct TaylorResult {
  Real y = 0;
  Real yp = 0;
  int terms = 0;   // terms summed, over all substeps
  Real radius = 0; // min(1-x, 1+x) at the original center
};

/// Omega of the requested normal form. `coord` is x for Trivial and TanhR,
/// theta for Angular.
Real omega(Transform t, const QuadParams& p, Real coord);

/// Omega of the tanh transform written as a function of x; the hot path of
/// the sweeps, so no domain check.
inline Real omega_tanh(const QuadParams& p, Real x) {
  const Real a2 = p.alpha * p.alpha;
  const Real b2 = p.beta * p.beta;
  return ((p.L - 1) * (p.L + 1) * (1 - x) * (1 + x) - 2 * a2 * (1 + x) - 2 * b2 * (1 - x)) / 4;
}

/// Scaled derivatives a_j = Y~^{(j)}(x)/j!, j = 0..N, of the trivially
/// transformed solution, from the five-term recurrence obtained by
/// differentiating Q Y~'' + R Y~ = 0 with Q = 4(1-x^2)^2.
std::vector<Real> taylor_coeffs(const QuadParams& p, const TaylorSeed& seed, int N);

/// Y~(x+h) and Y~'(x+h) by adaptively truncated Taylor sums. Steps longer
/// than half the local radius of convergence are split, each piece re-seeded
/// at its own center and limited to half of that center's radius.
TaylorResult taylor_step(const QuadParams& p, const TaylorSeed& seed, Real h,
                         const PrecisionConfig& cfg = PrecisionConfig::defaults());

/// As taylor_step, but to any target in (-1,1): the path may leave the disc
/// of convergence of the seed center, e.g. moving away from a nearby endpoint.
TaylorResult taylor_march(const QuadParams& p, const TaylorSeed& seed, Real target,
                          const PrecisionConfig& cfg = PrecisionConfig::defaults());

/// Empirical growth rate max_{j in last quartile} |a_j|^{1/j}, to be compared
/// with 1/min(1-x, 1+x).
Real growth_diagnostic(std::span<const Real> coeffs, Real x);

}  // namespace gaussjacobi
