#include "gaussjacobi/odekernel.hpp"

#include <algorithm>
#include <cmath>

namespace gaussjacobi {

namespace {

/// Q, R and their derivatives at the expansion center.
template <class T>
struct PolyData {
  T Q, Q1, Q2, Q3, Q4;
  T R, R1, R2;

  PolyData(const QuadParams& p, T x) {
    const T u = (1 - x) * (1 + x);
    const T L = p.L;
    const T l2m1 = (L - 1) * (L + 1);
    const T ca = 2 * (T(p.alpha) * p.alpha - 1);
    const T cb = 2 * (T(p.beta) * p.beta - 1);
    Q = 4 * u * u;
    Q1 = -16 * x * u;
    Q2 = -16 + 48 * x * x;
    Q3 = 96 * x;
    Q4 = 96;
    R = l2m1 * u - ca * (1 + x) - cb * (1 - x);
    R1 = -2 * l2m1 * x - ca + cb;
    R2 = -2 * l2m1;
  }

  /// a_{j+2} from a_{j+1}, a_j, a_{j-1}, a_{j-2}.
  T next(int j, T a1, T a0, T am1, T am2) const {
    const T jj = j;
    const T s = (jj + 1) * jj * Q1 * a1 + (jj * (jj - 1) / 2 * Q2 + R) * a0 +
                ((jj - 1) * (jj - 2) / 6 * Q3 + R1) * am1 + T(0.5) * ((jj - 2) * (jj - 3) / 12 * Q4 + R2) * am2;
    return -s / ((jj + 2) * (jj + 1) * Q);
  }
};

Real radius_at(Real x) { return std::min(1 - x, 1 + x); }


/// One Taylor sum from a center; |h| is assumed well inside the radius.
/// Works with b_j = a_j h^j so that coefficients stay bounded even when the
/// radius of convergence is tiny. The sums run in extended precision: a sweep
/// chains thousands of them and their rounding would otherwise accumulate in
/// the amplitude that fixes the weights.
TaylorResult sum_series(const QuadParams& p, const TaylorSeed& c, Real h, const PrecisionConfig& cfg) {
  using E = long double;
  const PolyData<E> d(p, c.x);
  const E he = h;
  const E h2 = he * he;
  const E h3 = h2 * he;
  const E h4 = h2 * h2;
  const E q1 = d.Q1 * he, q2 = d.Q2 * h2, r0 = d.R * h2;
  const E q3 = d.Q3 * h3, r1 = d.R1 * h3;
  const E q4 = d.Q4 * h4, r2 = d.R2 * h4;
  const E inv_q = 1 / d.Q;
  const E tol = cfg.taylor_tol;

  E bm2 = 0, bm1 = 0, b0 = c.y, b1 = E(c.yp) * he;
  E sy = 0, syp = 0;
  E scale_y = 0, scale_yp = 0;
  int quiet = 0;
  for (int j = 0; j < cfg.max_taylor_terms; ++j) {
    const E jj = j;
    const E ty = b0;
    const E typ = (jj + 1) * b1 / he;
    sy += ty;
    syp += typ;
    scale_y = std::max({scale_y, std::abs(sy), std::abs(ty)});
    scale_yp = std::max({scale_yp, std::abs(syp), std::abs(typ)});
    if (std::abs(ty) <= tol * scale_y && std::abs(typ) <= tol * scale_yp) {
      if (++quiet == 3) return {static_cast<Real>(sy), static_cast<Real>(syp), j + 1, radius_at(c.x)};
    } else {
      quiet = 0;
    }
    const E s = (jj + 1) * jj * q1 * b1 + (jj * (jj - 1) / 2 * q2 + r0) * b0 +
                ((jj - 1) * (jj - 2) / 6 * q3 + r1) * bm1 + E(0.5) * ((jj - 2) * (jj - 3) / 12 * q4 + r2) * bm2;
    const E b2 = -s * inv_q / ((jj + 2) * (jj + 1));
    bm2 = bm1;
    bm1 = b0;
    b0 = b1;
    b1 = b2;
  }
  throw Error(ErrorCode::NoConvergence, "taylor_step: term cap reached");
}

}  // namespace

Real omega(Transform t, const QuadParams& p, Real coord) {
  switch (t) {
    case Transform::Trivial: {
      const Real x = coord;
      if (!(x > -1 && x < 1)) throw Error(ErrorCode::DomainError, "omega: x outside (-1,1)");
      const Real u = (1 - x) * (1 + x);
      const Real R = (p.L - 1) * (p.L + 1) * u - 2 * (p.alpha * p.alpha - 1) * (1 + x) -
                     2 * (p.beta * p.beta - 1) * (1 - x);
      return R / (4 * u * u);
    }
    case Transform::Angular: {
      const Real th = coord;
      if (!(th > 0 && th < kPi)) throw Error(ErrorCode::DomainError, "omega: theta outside (0,pi)");
      const Real sh = std::sin(th / 2);
      const Real ch = std::cos(th / 2);
      // 1-x = 2 sin^2(theta/2), 1+x = 2 cos^2(theta/2)
      return p.L * p.L / 4 - (p.alpha * p.alpha - Real(0.25)) / (4 * sh * sh) -
             (p.beta * p.beta - Real(0.25)) / (4 * ch * ch);
    }
    case Transform::TanhR: {
      const Real x = coord;
      if (!(x > -1 && x < 1)) throw Error(ErrorCode::DomainError, "omega: x outside (-1,1)");
      return omega_tanh(p, x);
    }
  }
  throw Error(ErrorCode::DomainError, "omega: unknown transform");
}

std::vector<Real> taylor_coeffs(const QuadParams& p, const TaylorSeed& seed, int N) {
  if (!(seed.x > -1 && seed.x < 1)) throw Error(ErrorCode::DomainError, "taylor_coeffs: center outside (-1,1)");
  if (N < 0) return {};
  std::vector<Real> a(static_cast<std::size_t>(N) + 1, Real(0));
  a[0] = seed.y;
  if (N >= 1) a[1] = seed.yp;
  const PolyData<Real> d(p, seed.x);
  for (int j = 0; j + 2 <= N; ++j) {
    const Real am1 = j >= 1 ? a[j - 1] : Real(0);
    const Real am2 = j >= 2 ? a[j - 2] : Real(0);
    a[j + 2] = d.next(j, a[j + 1], a[j], am1, am2);
  }
  return a;
}

TaylorResult taylor_march(const QuadParams& p, const TaylorSeed& seed, Real target, const PrecisionConfig& cfg) {
  const Real radius = radius_at(seed.x);
  if (!(radius > 0)) throw Error(ErrorCode::DomainError, "taylor_step: center outside (-1,1)");
  if (!(target > -1 && target < 1)) throw Error(ErrorCode::DomainError, "taylor_step: target outside (-1,1)");
  if (target == seed.x) return {seed.y, seed.yp, 1, radius};
  if (std::abs(target - seed.x) <= radius / 2) {
    TaylorResult r = sum_series(p, seed, target - seed.x, cfg);
    r.radius = radius;
    return r;
  }
  TaylorSeed cur = seed;
  int terms = 0;
  for (;;) {
    const Real half = radius_at(cur.x) / 2;
    const bool last = std::abs(target - cur.x) <= half;
    // Land on a representable center and step by the exact difference.
    const Real next = last ? target : cur.x + std::copysign(half, target - cur.x);
    const TaylorResult r = sum_series(p, cur, next - cur.x, cfg);
    terms += r.terms;
    cur = {next, r.y, r.yp};
    if (last) break;
  }
  return {cur.y, cur.yp, terms, radius};
}

TaylorResult taylor_step(const QuadParams& p, const TaylorSeed& seed, Real h, const PrecisionConfig& cfg) {
  const Real radius = radius_at(seed.x);
  if (!(radius > 0)) throw Error(ErrorCode::DomainError, "taylor_step: center outside (-1,1)");
  if (!(std::abs(h) < radius)) throw Error(ErrorCode::StepOutOfRadius, "taylor_step: |h| >= radius");
  return taylor_march(p, seed, seed.x + h, cfg);
}

Real growth_diagnostic(std::span<const Real> coeffs, Real /*x*/) {
  const std::size_t N = coeffs.size();
  if (N < 16) throw Error(ErrorCode::DomainError, "growth_diagnostic: need at least 16 coefficients");
  Real best = 0;
  for (std::size_t j = N - N / 4; j < N; ++j) {
    best = std::max(best, std::pow(std::abs(coeffs[j]), Real(1) / Real(j)));
  }
  return best;
}

}  // namespace gaussjacobi
