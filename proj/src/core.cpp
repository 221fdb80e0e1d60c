#include "gaussjacobi/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gaussjacobi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::StepOutOfRadius: return "StepOutOfRadius";
    case ErrorCode::MaxItersExceeded: return "MaxItersExceeded";
    case ErrorCode::OmegaNonpositive: return "OmegaNonpositive";
    case ErrorCode::DeltaNonpositive: return "DeltaNonpositive";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::SingularNormalization: return "SingularNormalization";
    case ErrorCode::EigenNoConvergence: return "EigenNoConvergence";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
  }
  return "Unknown";
}

QuadParams QuadParams::swapped() const {
  QuadParams s = *this;
  s.alpha = beta;
  s.beta = alpha;
  s.x_e = -x_e;
  return s;
}

PrecisionConfig PrecisionConfig::defaults() {
  PrecisionConfig cfg;
  cfg.fp_tol = std::pow(cfg.eps, Real(0.75));
  cfg.taylor_tol = cfg.eps / 4;
  return cfg;
}

void PrecisionConfig::validate() const {
  if (!(fp_tol > 0 && fp_tol < 1) || !(taylor_tol > 0 && taylor_tol < 1)) {
    throw Error(ErrorCode::ParameterOutOfRange, "tolerances must lie in (0, 1)");
  }
  if (max_fp_iters < 5 || max_taylor_terms < 32 || max_cf_terms < 1) {
    throw Error(ErrorCode::ParameterOutOfRange, "iteration caps too small");
  }
}

QuadParams make_params(int n, Real alpha, Real beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw Error(ErrorCode::NotFinite, "alpha and beta must be finite");
  }
  if (n < 1) {
    std::ostringstream os;
    os << "degree must be >= 1, got " << n;
    throw Error(ErrorCode::DegreeOutOfRange, os.str());
  }
  if (!(alpha > -1) || !(beta > -1)) {
    std::ostringstream os;
    os << "alpha and beta must exceed -1, got (" << alpha << ", " << beta << ")";
    throw Error(ErrorCode::ParameterOutOfRange, os.str());
  }
  QuadParams p;
  p.n = n;
  p.alpha = alpha;
  p.beta = beta;
  p.L = 2 * Real(n) + (alpha + beta) + 1;  // symmetric in (alpha, beta) bit for bit
  // (beta^2 - alpha^2) factored to keep x_e exactly 0 when alpha == beta.
  p.x_e = (beta - alpha) * (beta + alpha) / ((p.L - 1) * (p.L + 1));
  return p;
}

Real log_gamma(Real x) {
  if (!(x > 0)) {
    throw Error(ErrorCode::DomainError, "log_gamma requires x > 0");
  }
  if (std::isinf(x)) return x;
  // lgamma_r leaves the global signgam alone; the sign is positive for x > 0.
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

Real log_moment0(Real alpha, Real beta) {
  return (alpha + beta + 1) * std::log(Real(2)) + log_gamma(alpha + 1) + log_gamma(beta + 1) -
         log_gamma(alpha + beta + 2);
}

namespace {

Real moment0(Real alpha, Real beta) {
  // Direct Gamma values are exact for small integer arguments; fall back to
  // the log form once they would overflow.
  constexpr Real kDirectLimit = 150;
  if (alpha + beta + 2 < kDirectLimit) {
    using LD = long double;
    const LD a = alpha, b = beta;
    return static_cast<Real>(std::pow(LD(2), a + b + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) /
                             std::tgamma(a + b + 2));
  }
  const Real value = std::exp(log_moment0(alpha, beta));
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::Overflow, "mu_0 exceeds the scalar range; use log_moment0");
  }
  return value;
}

}  // namespace

Real moment(Real alpha, Real beta, int k) {
  if (!(alpha > -1) || !(beta > -1)) {
    throw Error(ErrorCode::ParameterOutOfRange, "moment requires alpha, beta > -1");
  }
  const Real mu0 = moment0(alpha, beta);
  const Real s = alpha + beta + 2;
  switch (k) {
    case 0: return mu0;
    case 1: return mu0 * (beta - alpha) / s;
    case 2: return mu0 * ((alpha - beta) * (alpha - beta) + s) / (s * (s + 1));
    default: throw Error(ErrorCode::DomainError, "moment order must be 0, 1 or 2");
  }
}

namespace {

/// Stirling correction ln Gamma(z) - (z-1/2) ln z + z - ln(2 pi)/2, z >= 20.
Real stirling_tail(Real z) {
  const Real r = 1 / z;
  const Real r2 = r * r;
  return r * (Real(1) / 12 +
              r2 * (Real(-1) / 360 + r2 * (Real(1) / 1260 + r2 * (Real(-1) / 1680 + r2 * (Real(1) / 1188)))));
}

}  // namespace

Real log_gamma_ratio(Real x, Real y) {
  if (!(x > 0 && y > 0)) throw Error(ErrorCode::DomainError, "log_gamma_ratio requires positive arguments");
  if (x == y) return 0;
  constexpr Real kStirling = 20;
  if (std::min(x, y) < kStirling) return log_gamma(x) - log_gamma(y);
  // (x-1/2) ln x - (y-1/2) ln y = (x-y) ln y + (x-1/2) ln(x/y)
  const Real d = x - y;
  return d * std::log(y) + (x - Real(0.5)) * std::log1p(d / y) - d + (stirling_tail(x) - stirling_tail(y));
}

Real log_M(const QuadParams& p) {
  const Real n = p.n;
  return (p.alpha + p.beta + 1) * std::log(Real(2)) + log_gamma_ratio(n + p.alpha + 1, n + p.alpha + p.beta + 1) +
         log_gamma_ratio(n + p.beta + 1, n + 1);
}

Real log_K(const QuadParams& p) {
  const Real n = p.n;
  const Real a = p.alpha, b = p.beta;
  // (2 (n-1)! / ((n+a+b+1) (a+2)_{n-1}))^2 M, regrouped into Gamma ratios of
  // nearby arguments.
  return (a + b + 3) * std::log(Real(2)) + 2 * log_gamma(a + 2) - 2 * std::log(n + a + b + 1) - std::log(n) +
         log_gamma_ratio(n, n + a + 1) + log_gamma_ratio(n + b + 1, n + a + b + 1);
}

}  // namespace gaussjacobi
