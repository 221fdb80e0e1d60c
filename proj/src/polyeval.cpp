#include "gaussjacobi/polyeval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gaussjacobi {

Real ratio_ttrr(const QuadParams& p, Real x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::NotFinite, "ratio_ttrr: x must be finite");
  const Real a = p.alpha;
  const Real b = p.beta;
  Real r = (a - b + (a + b + 2) * x) / 2;
  for (int k = 1; k < p.n; ++k) {
    const Real Lk = 2 * Real(k) + a + b + 1;
    const Real A = 2 * Real(k + 1) * (k + a + b + 1) * (Lk - 1);
    const Real B = Lk * ((Lk - 1) * (Lk + 1) * x + (a - b) * (a + b));
    const Real C = 2 * (Lk + 1) * (k + a) * (k + b);
    // r == 0 yields C/r = +-inf and the next ratio is again finite, which is
    // the correct continuation through a zero of P_k.
    r = (B - C / r) / A;
  }
  return r;
}

Real log_deriv_tilde(const QuadParams& p, Real x) {
  if (!(x > -1 && x < 1)) throw Error(ErrorCode::DomainError, "log_deriv_tilde: x outside (-1,1)");
  const Real n = p.n;
  const Real a = p.alpha;
  const Real b = p.beta;
  const Real r = ratio_ttrr(p, x);
  if (r == 0) {
    return std::copysign(std::numeric_limits<Real>::infinity(), r);
  }
  const Real one_minus_x2 = (1 - x) * (1 + x);
  return (n + b + 1) / (2 * (1 + x)) - (n + a + 1) / (2 * (1 - x)) +
         (n * (a - b) + 2 * (n + a) * (n + b) / r) / ((p.L - 1) * one_minus_x2);
}

RatioResult cf_ratio_alpha_gap(const QuadParams& p, Real one_minus_x, const PrecisionConfig& cfg) {
  if (!(one_minus_x > 0 && one_minus_x < 3)) {
    throw Error(ErrorCode::DomainError, "cf_ratio_alpha: requires |x-1| < 2 with x < 1");
  }
  const Real n = p.n;
  const Real b = p.beta;
  const Real s = one_minus_x;
  constexpr Real tiny = 1e-300;
  // Successive convergent factors cannot settle closer to 1 than one ulp.
  const Real tol = std::max(cfg.taylor_tol, cfg.eps);

  // H_{a+1} = a_{a+1} / (b_{a+1} + a_{a+2} / (b_{a+2} + ...)).
  Real f = tiny;
  Real C = f;
  Real D = 0;
  RatioResult out;
  for (int k = 1; k <= cfg.max_cf_terms; ++k) {
    const Real ak = p.alpha + k;
    const Real denom = (n + ak + b + 1) * s;
    const Real num = -2 * (ak + n) / denom;
    const Real den = -1 - (n * s + 2 * ak) / denom;
    D = den + num * D;
    if (D == 0) D = tiny;
    C = den + num / C;
    if (C == 0) C = tiny;
    D = 1 / D;
    const Real delta = C * D;
    f *= delta;
    out.terms_used = k;
    if (std::abs(delta - 1) <= tol) {
      out.value = f;
      out.converged = true;
      return out;
    }
  }
  throw Error(ErrorCode::NoConvergence, "cf_ratio_alpha: convergent cap reached");
}

RatioResult cf_ratio_alpha(const QuadParams& p, Real x, const PrecisionConfig& cfg) {
  return cf_ratio_alpha_gap(p, 1 - x, cfg);
}

Real h_theta(const QuadParams& p, Real theta, const PrecisionConfig& cfg) {
  if (!(theta > 0 && theta < kPi)) throw Error(ErrorCode::DomainError, "h_theta: theta outside (0,pi)");
  const Real sh = std::sin(theta / 2);
  const Real s2 = sh * sh;
  const Real H = cf_ratio_alpha_gap(p, 2 * s2, cfg).value;
  const Real inv_h = Real(0.5) + p.alpha + p.L * s2 - 2 * (p.n + p.alpha + p.beta + 1) * s2 * H;
  if (inv_h == 0) return std::numeric_limits<Real>::infinity();
  return 1 / inv_h;
}

Real terminating_2f1(const QuadParams& p, Real s2) {
  const Real a = -Real(p.n) + 1;
  const Real b = p.n + p.alpha + p.beta + 2;
  const Real c = p.alpha + 2;
  Real term = 1;
  Real sum = 1;
  for (int k = 0; k + 1 < p.n; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * s2;
    if (term == 0) break;
    sum += term;
  }
  return sum;
}

Real terminating_2f1_recurrence(const QuadParams& p, Real s2) {
  using LD = long double;
  const LD a = LD(p.alpha) + 1, b = LD(p.beta) + 1, s = s2;
  // f_k = P_k(x)/P_k(1) obeys f_{k+1} = (1 + C_k - 2 s B_k) f_k - C_k f_{k-1}.
  LD f = 1, d = 0;
  for (int k = 0; k + 1 < p.n; ++k) {
    const LD kk = k;
    const LD ab = 2 * kk + a + b;
    const LD B = (ab + 1) * (ab + 2) / (2 * (kk + a + b + 1) * (kk + a + 1));
    const LD C = kk * (kk + b) * (ab + 2) / ((kk + a + b + 1) * ab * (kk + a + 1));
    d = C * d - 2 * s * B * f;
    f += d;
  }
  return static_cast<Real>(f);
}

}  // namespace gaussjacobi
