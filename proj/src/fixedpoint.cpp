#include "gaussjacobi/fixedpoint.hpp"

#include <cmath>

#include "gaussjacobi/odekernel.hpp"
#include "gaussjacobi/polyeval.hpp"

namespace gaussjacobi {

Real arctan_branch(int j, Real zeta) {
  if (std::isinf(zeta)) return j * kPi / 2;
  const Real a = std::atan(zeta);
  return j * zeta > 0 ? a : a + j * kPi;
}

namespace {

struct TanhUpdate {
  Real x_next;
  Real F;
  bool ahead;  // false: the local model has no zero ahead of x
};

TanhUpdate apply_step(Real x, Real F) {
  // x_next = (x - t)/(1 - x t), written as an increment so that rounding
  // never moves x against the step.
  const Real t = std::tanh(F);
  return {x - t * ((1 - x) * (1 + x)) / (1 - x * t), F, true};
}

/// z-step of the fixed-point map. For Omega(x) <= 0 the local model is
/// Y'' = |Omega| Y, whose solution has at most one zero; the step goes to it
/// through artanh. Since Omega decreases along the sweep, that model has a
/// zero before the true solution does, so "no zero in the model" proves that
/// the sweep is finished. This region only matters for alpha < 0, where a
/// last node can lie beyond the turning point.
TanhUpdate tanh_update(const QuadParams& p, Real x, Real y, Real yp, bool strict, bool skip = false) {
  const Real om = omega_tanh(p, x);
  // Y(z)/Ydot(z) expressed through the trivially transformed function.
  const Real denom = (1 - x) * (1 + x) * yp + x * y;
  const Real ratio = y == 0 ? Real(0) : y / denom;
  if (om > 0) {
    const Real sq = std::sqrt(om);
    // Leaving a node the full branch is taken on either side of it.
    if (skip) return apply_step(x, (std::atan(sq * ratio) - kPi) / sq);
    return apply_step(x, arctan_branch(-1, sq * ratio) / sq);
  }
  if (strict) throw Error(ErrorCode::OmegaNonpositive, "Omega(x) <= 0");
  if (skip) return {x, 0, false};
  // For alpha >= 0 the solution is recessive at x = 1 and cannot vanish
  // where Omega < 0: past a zero |Y| would grow without bound.
  if (y == 0 || p.alpha >= 0) return {x, 0, false};
  if (om == 0) {
    if (!(ratio < 0)) return {x, 0, false};
    return apply_step(x, ratio);
  }
  const Real s = std::sqrt(-om);
  const Real zeta = s * ratio;
  if (!(zeta < 0 && zeta > -1)) return {x, 0, false};
  return apply_step(x, std::atanh(zeta) / s);
}

/// Same local model without the branch choice: a small correction towards
/// the nearest zero on either side.
TanhUpdate local_update(const QuadParams& p, Real x, Real y, Real yp) {
  const Real om = omega_tanh(p, x);
  const Real denom = (1 - x) * (1 + x) * yp + x * y;
  const Real ratio = y / denom;
  if (om > 0) {
    const Real sq = std::sqrt(om);
    return apply_step(x, std::atan(sq * ratio) / sq);
  }
  const Real s = std::sqrt(-om);
  if (om == 0 || !(std::abs(s * ratio) < 1)) return apply_step(x, ratio);
  return apply_step(x, std::atanh(s * ratio) / s);
}

}  // namespace

Real step_tanh(const QuadParams& p, const SweepState& s) { return tanh_update(p, s.x, s.y, s.yp, true).x_next; }

NodeSolution find_next_node(const QuadParams& p, const SweepState& s, const PrecisionConfig& cfg,
                            IterateTrace* trace) {
  if (s.y == 0 && s.yp == 0) throw Error(ErrorCode::DomainError, "solve_node: trivial state (0, 0)");
  const Real guard = 1 - 8 * cfg.eps;
  NodeSolution out;
  Real x = s.x, y = s.y, yp = s.yp;
  // Sign of Y~ on the near side of the node being sought. The iterates cannot
  // pass the node in exact arithmetic; once one lands past it by roundoff the
  // remaining corrections are taken without the branch choice.
  Real y_ref = s.at_node ? s.yp : s.y;
  bool crossed = false;
  for (;;) {
    if (out.iters >= cfg.max_fp_iters) {
      throw Error(ErrorCode::MaxItersExceeded, "solve_node: fixed-point iteration cap reached");
    }
    if (out.iters > 0) {
      if (y == 0) break;
      if (y_ref == 0) y_ref = y;
      crossed = crossed || std::signbit(y) != std::signbit(y_ref);
    }
    const TanhUpdate u =
        crossed ? local_update(p, x, y, yp) : tanh_update(p, x, y, yp, false, s.at_node && out.iters == 0);
    if (!u.ahead) {
      out.end = SweepEnd::OmegaNonpositive;
      return out;
    }
    if (trace) {
      trace->x.push_back(x);
      trace->y.push_back(y);
      trace->F.push_back(u.F);
    }
    if (!(u.x_next < guard)) {
      out.end = SweepEnd::BoundaryGuard;
      return out;
    }
    if (u.x_next == x) break;  // below the resolution of x
    const TaylorResult t = taylor_march(p, {x, y, yp}, u.x_next, cfg);
    ++out.iters;
    out.taylor_terms += t.terms;
    x = u.x_next;
    y = t.y;
    yp = t.yp;
    if (std::abs(u.F) <= cfg.fp_tol) break;
  }
  out.x = x;
  out.y = y;
  out.yp = yp;
  return out;
}

NodeSolution solve_node(const QuadParams& p, const SweepState& s, const PrecisionConfig& cfg,
                        IterateTrace* trace) {
  NodeSolution r = find_next_node(p, s, cfg, trace);
  if (r.end == SweepEnd::OmegaNonpositive) {
    throw Error(ErrorCode::OmegaNonpositive, "solve_node: left the oscillatory region");
  }
  if (r.end == SweepEnd::BoundaryGuard) {
    throw Error(ErrorCode::OmegaNonpositive, "solve_node: iterate reached x = 1");
  }
  return r;
}

AngularRefinement refine_angular(const QuadParams& p, Real theta0, const PrecisionConfig& cfg) {
  if (!(theta0 > 0 && theta0 < kPi)) throw Error(ErrorCode::DomainError, "refine_angular: theta outside (0,pi)");
  const Real a2 = p.alpha * p.alpha;
  const Real b2 = p.beta * p.beta;
  AngularRefinement out{theta0, 0};
  Real th = theta0;
  while (out.iters < cfg.max_fp_iters) {
    const Real sh = std::sin(th / 2);
    const Real st = std::sin(th);
    const Real delta = Real(0.25) - a2 + (a2 - b2) * sh * sh + p.L * p.L / 4 * st * st;
    const Real h = h_theta(p, th, cfg);
    Real step;
    if (delta > 0) {
      const Real sq = std::sqrt(delta);
      step = st / sq * std::atan(sq * h);
    } else if (delta < 0) {
      // Same local model with imaginary frequency.
      const Real sq = std::sqrt(-delta);
      const Real u = sq * h;
      if (!(std::abs(u) < 1)) throw Error(ErrorCode::DeltaNonpositive, "refine_angular: no zero of the local model");
      step = st / sq * std::atanh(u);
    } else {
      step = st * h;
    }
    if (!std::isfinite(step)) throw Error(ErrorCode::NoConvergence, "refine_angular: non-finite step");
    th -= step;
    ++out.iters;
    if (!(th > 0 && th < kPi)) throw Error(ErrorCode::NoConvergence, "refine_angular: left (0,pi)");
    if (std::abs(step) <= cfg.fp_tol * th) {
      out.theta = th;
      return out;
    }
  }
  throw Error(ErrorCode::MaxItersExceeded, "refine_angular: iteration cap reached");
}

}  // namespace gaussjacobi
