#include "gaussjacobi/jacobi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>

#include "gaussjacobi/fixedpoint.hpp"
#include "gaussjacobi/polyeval.hpp"

namespace gaussjacobi {

XeSeed seed_at_xe(const QuadParams& p) {
  // One orientation is computed and the other mirrored, so that the rules for
  // (alpha, beta) and (beta, alpha) are exact reflections of each other.
  if (p.alpha > p.beta) {
    const XeSeed m = seed_at_xe(p.swapped());
    return {{-m.seed.x, m.seed.y, -m.seed.yp}, m.is_node};
  }
  const Real r = log_deriv_tilde(p, p.x_e);
  if (std::isinf(r)) return {{p.x_e, 0, 1}, true};
  if (std::abs(r) <= 1) return {{p.x_e, 1, r}, false};
  return {{p.x_e, 1 / r, 1}, false};
}

SweepOutput sweep_from_xe(const QuadParams& p, const TaylorSeed& seed, int max_nodes, const PrecisionConfig& cfg) {
  SweepOutput out;
  SweepState st{seed.x, seed.y, seed.yp, 0, 0};
  Real last = seed.x;
  while (out.count < max_nodes) {
    const NodeSolution s = find_next_node(p, st, cfg);
    if (s.end == SweepEnd::OmegaNonpositive) {
      out.terminated_by = SweepTermination::OmegaNonpositive;
      return out;
    }
    if (s.end == SweepEnd::BoundaryGuard) {
      out.terminated_by = SweepTermination::BoundaryGuard;
      return out;
    }
    if (!(s.x > last)) throw Error(ErrorCode::NoConvergence, "sweep: node sequence not increasing");
    last = s.x;
    out.nodes.push_back(s.x);
    out.yprimes.push_back(s.yp);
    // Y~ is not exactly zero at the rounded node. The amplitude
    // (dY/dz)^2 + Omega Y^2 of the normal form is stationary there, which moves
    // the scaled weight to the true node. The sweep continues from the true
    // state, since resetting Y~ to 0 would shift the solution by O(eps/u).
    const Real u = (1 - s.x) * (1 + s.x);
    const Real d = u * s.yp + s.x * s.y;
    const Real shift = s.yp != 0 ? -s.y / s.yp : Real(0);
    const Real us = ((1 - s.x) - shift) * ((1 + s.x) + shift);
    const Real q = s.y / d;
    const Real oq2 = omega_tanh(p, s.x) * q * q;
    out.shifts.push_back(shift);
    out.log_omegas.push_back(std::log(us) + std::log(u) - 2 * std::log(std::abs(d)) - std::log1p(oq2));
    out.iters.push_back(s.iters);
    out.taylor_terms.push_back(s.taylor_terms);
    ++out.count;
    st = {s.x, s.y, s.yp, 0, out.count, true};
  }
  out.terminated_by = SweepTermination::CountCap;
  return out;
}

int extreme_count(int n) {
  const int decades = static_cast<int>(std::floor(std::log10(static_cast<double>(n))));
  return 3 + std::max(0, decades - 1);
}

Real log_extreme_weight(const QuadParams& p, Real theta) {
  if (!(theta > 0 && theta < kPi)) throw Error(ErrorCode::DomainError, "extreme_weight: theta outside (0,pi)");
  const Real sh = std::sin(theta / 2);
  const Real F = terminating_2f1_recurrence(p, sh * sh);
  return log_K(p) - 2 * std::log(std::sin(theta)) - 2 * std::log(std::abs(F));
}

Real extreme_weight(const QuadParams& p, Real theta) {
  const Real w = std::exp(log_extreme_weight(p, theta));
  if (std::isinf(w)) throw Error(ErrorCode::Overflow, "extreme_weight: overflow; use log_extreme_weight");
  return w;
}

namespace {

const Real kLogMinNormal = std::log(std::numeric_limits<Real>::min());

struct Exp {
  std::size_t flushed = 0;
  Real operator()(Real lw) {
    if (lw < kLogMinNormal) {
      ++flushed;
      return 0;
    }
    const Real w = std::exp(lw);
    if (std::isinf(w)) throw Error(ErrorCode::Overflow, "weight exceeds the scalar range");
    return w;
  }
};

void finish(NormalizedWeights& out) {
  Exp ex;
  for (Real lw : out.log_taylor) out.taylor.push_back(ex(lw));
  for (Real lw : out.log_low) out.low.push_back(ex(lw));
  for (Real lw : out.log_high) out.high.push_back(ex(lw));
  out.flushed = ex.flushed;
}

Real max_of(const std::vector<Real>& v) {
  return v.empty() ? Real(0) : *std::max_element(v.begin(), v.end());
}

/// Solves A g = b for m <= 3 by Gaussian elimination with full pivoting.
template <std::size_t N>
std::array<Real, N> solve_full_pivot(std::array<std::array<Real, N>, N> A, std::array<Real, N> b, std::size_t m) {
  std::array<std::size_t, N> col{};
  for (std::size_t j = 0; j < m; ++j) col[j] = j;
  Real amax = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) amax = std::max(amax, std::abs(A[i][j]));
  const Real floor = 1e3 * std::numeric_limits<Real>::epsilon() * amax;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t pi = k, pj = k;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < m; ++j)
        if (std::abs(A[i][j]) > std::abs(A[pi][pj])) {
          pi = i;
          pj = j;
        }
    if (!(std::abs(A[pi][pj]) > floor)) throw Error(ErrorCode::SingularNormalization, "moment system is singular");
    std::swap(A[k], A[pi]);
    std::swap(b[k], b[pi]);
    for (std::size_t i = 0; i < m; ++i) std::swap(A[i][k], A[i][pj]);
    std::swap(col[k], col[pj]);
    for (std::size_t i = k + 1; i < m; ++i) {
      const Real f = A[i][k] / A[k][k];
      for (std::size_t j = k; j < m; ++j) A[i][j] -= f * A[k][j];
      b[i] -= f * b[k];
    }
  }
  std::array<Real, N> y{};
  for (std::size_t k = m; k-- > 0;) {
    Real s = b[k];
    for (std::size_t j = k + 1; j < m; ++j) s -= A[k][j] * y[j];
    y[k] = s / A[k][k];
  }
  std::array<Real, N> g{};
  for (std::size_t k = 0; k < m; ++k) g[col[k]] = y[k];
  return g;
}

}  // namespace

NormalizedWeights normalize_general(const WeightSet& taylor, const WeightSet& low, const WeightSet& high,
                                    const QuadParams& p, std::optional<NormalizationScheme> scheme) {
  if (taylor.x.size() != taylor.log_w.size() || low.x.size() != low.log_w.size() ||
      high.x.size() != high.log_w.size()) {
    throw Error(ErrorCode::LengthMismatch, "normalize_general: node and weight counts differ");
  }
  NormalizedWeights out;
  out.scheme = scheme.value_or(std::min(p.alpha, p.beta) > Real(-0.75) ? NormalizationScheme::Mu0WithExplicitK
                                                                          : NormalizationScheme::ThreeMoments);
  const Real log_mu0 = log_moment0(p.alpha, p.beta);

  if (out.scheme == NormalizationScheme::Mu0WithExplicitK || out.scheme == NormalizationScheme::Mu0) {
    // Refined weights relative to mu_0; the Taylor set completes the mass.
    Real refined = 0;
    for (const WeightSet* s : {&low, &high})
      for (Real lw : s->log_w) refined += std::exp(lw - log_mu0);
    out.log_low = low.log_w;
    out.log_high = high.log_w;
    if (!taylor.empty()) {
      const Real rest = 1 - refined;
      if (!(rest > 0)) throw Error(ErrorCode::SingularNormalization, "refined weights exceed mu_0");
      const Real m = max_of(taylor.log_w);
      Real sum = 0;
      for (Real lw : taylor.log_w) sum += std::exp(lw - m);
      const Real shift = log_mu0 + std::log(rest) - std::log(sum) - m;
      for (Real lw : taylor.log_w) out.log_taylor.push_back(lw + shift);
    }
    finish(out);
    return out;
  }

  if (out.scheme != NormalizationScheme::ThreeMoments) {
    throw Error(ErrorCode::DomainError, "normalize_general: unsupported scheme");
  }
  // The moments of 1, x, x^2 are imposed through the equivalent basis
  // 1-x, 1+x, 1-x^2, which nearly annihilates the refined sets in turn and
  // keeps the system close to triangular. Right-hand sides are relative to mu_0.
  const Real s = p.alpha + p.beta + 2;
  const Real e_minus = 2 * (p.alpha + 1) / s;
  const Real e_plus = 2 * (p.beta + 1) / s;
  const Real e_both = 4 * (p.alpha + 1) * (p.beta + 1) / (s * (s + 1));
  std::array<const WeightSet*, 3> sets{};
  std::array<Real, 3> shift{};
  std::size_t m = 0;
  for (const WeightSet* ws : {&taylor, &low, &high})
    if (!ws->empty()) sets[m++] = ws;
  if (m == 0) return out;
  auto basis = [m](std::size_t k, Real x) -> Real {
    if (m == 1) return 1;
    return k == 0 ? 1 - x : k == 1 ? 1 + x : (1 - x) * (1 + x);
  };
  std::array<std::array<Real, 3>, 3> A{};
  std::array<Real, 3> b{};
  for (std::size_t j = 0; j < m; ++j) {
    shift[j] = max_of(sets[j]->log_w);
    for (std::size_t i = 0; i < sets[j]->x.size(); ++i) {
      const Real t = std::exp(sets[j]->log_w[i] - shift[j]);
      const Real x = sets[j]->x[i];
      for (std::size_t k = 0; k < m; ++k) A[k][j] += t * basis(k, x);
    }
  }
  if (m == 1) {
    b[0] = 1;
  } else {
    b[0] = e_minus;
    b[1] = e_plus;
    b[2] = e_both;
  }
  const std::array<Real, 3> g = solve_full_pivot<3>(A, b, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (!(g[j] > 0)) throw Error(ErrorCode::SingularNormalization, "moment system gives a non-positive scale");
    const Real add = log_mu0 + std::log(g[j]) - shift[j];
    std::vector<Real>& dst = sets[j] == &taylor ? out.log_taylor : sets[j] == &low ? out.log_low : out.log_high;
    for (Real lw : sets[j]->log_w) dst.push_back(lw + add);
  }
  finish(out);
  return out;
}

namespace {

Real log_taylor_weight(Real alpha, Real beta, Real x, Real shift, Real log_omega) {
  return log_omega + alpha * std::log((1 - x) - shift) + beta * std::log((1 + x) + shift);
}

NodeRecord sweep_record(Real x, Real log_w, int iters, int terms) {
  NodeRecord r;
  r.x = x;
  r.log_scaled_weight = log_w;
  r.iters = iters;
  r.taylor_terms = terms;
  return r;
}

}  // namespace

GeneralRule jacobi_rule(int n, Real alpha, Real beta, const PrecisionConfig& cfg, const JacobiOptions& opts) {
  cfg.validate();
  const QuadParams p = make_params(n, alpha, beta);
  GeneralRule rule;
  rule.params = p;

  if (n == 1) {
    // Omega may have no oscillatory region at all here; the rule is explicit.
    NodeRecord r;
    r.x = (beta - alpha) / (alpha + beta + 2);
    r.source = NodeSource::Seed;
    rule.nodes = {r.x};
    rule.weights = {moment(alpha, beta, 0)};
    rule.log_weights = {log_moment0(alpha, beta)};
    rule.records = {r};
    rule.scheme = NormalizationScheme::ClosedForm;
    rule.stats = summarize(rule.records);
    return rule;
  }

  const XeSeed xs = seed_at_xe(p);
  const int cap = n - (xs.is_node ? 1 : 0);
  const QuadParams q = p.swapped();
  const TaylorSeed mirror{-xs.seed.x, xs.seed.y, -xs.seed.yp};

  SweepOutput up, down;
  if (opts.parallel_sweeps) {
    auto fut = std::async(std::launch::async, [&] { return sweep_from_xe(q, mirror, cap, cfg); });
    up = sweep_from_xe(p, xs.seed, cap, cfg);
    down = fut.get();
  } else {
    up = sweep_from_xe(p, xs.seed, cap, cfg);
    down = sweep_from_xe(q, mirror, cap, cfg);
  }
  if (up.count + down.count + (xs.is_node ? 1 : 0) != n) {
    throw Error(ErrorCode::CountMismatch, "sweeps found " + std::to_string(up.count) + " + " +
                                              std::to_string(down.count) + (xs.is_node ? " + 1" : "") +
                                              " nodes for degree " + std::to_string(n));
  }

  std::vector<NodeRecord>& rec = rule.records;
  rec.reserve(static_cast<std::size_t>(n));
  for (int i = down.count - 1; i >= 0; --i) {
    const Real t = down.nodes[i];
    rec.push_back(sweep_record(-t, log_taylor_weight(beta, alpha, t, down.shifts[i], down.log_omegas[i]), down.iters[i],
                               down.taylor_terms[i]));
  }
  if (xs.is_node) {
    NodeRecord r = sweep_record(p.x_e, log_taylor_weight(alpha, beta, p.x_e, 0, -2 * std::log(std::abs(xs.seed.yp))), 0, 0);
    r.source = NodeSource::Seed;
    rec.push_back(r);
  }
  for (int i = 0; i < up.count; ++i) {
    rec.push_back(sweep_record(up.nodes[i], log_taylor_weight(alpha, beta, up.nodes[i], up.shifts[i], up.log_omegas[i]),
                               up.iters[i], up.taylor_terms[i]));
  }

  const bool force = opts.refine == RefineMode::Force;
  const bool auto_mode = opts.refine == RefineMode::Auto;
  const bool hi = force || (auto_mode && alpha < 0);
  const bool lo = force || (auto_mode && beta < 0);
  const int k = std::min(extreme_count(n), n);
  int n_hi = hi ? k : 0;
  int n_lo = lo ? k : 0;
  if (n_hi + n_lo > n) {
    n_hi = (n + 1) / 2;
    n_lo = n / 2;
  }

  for (int i = 0; i < n_hi; ++i) {
    NodeRecord& r = rec[static_cast<std::size_t>(n - 1 - i)];
    const Real theta0 = 2 * std::asin(std::sqrt((1 - r.x) / 2));
    const AngularRefinement a = refine_angular(p, theta0, cfg);
    r.theta = a.theta;
    r.x = std::cos(a.theta);
    r.refine_iters = a.iters;
    r.log_scaled_weight = log_extreme_weight(p, a.theta);
    r.source = NodeSource::AngularRefined;
  }
  for (int i = 0; i < n_lo; ++i) {
    NodeRecord& r = rec[static_cast<std::size_t>(i)];
    const Real theta0 = 2 * std::asin(std::sqrt((1 + r.x) / 2));
    const AngularRefinement a = refine_angular(q, theta0, cfg);
    r.theta = a.theta;
    r.x = -std::cos(a.theta);
    r.refine_iters = a.iters;
    r.log_scaled_weight = log_extreme_weight(q, a.theta);
    r.source = NodeSource::AngularRefined;
  }
  for (std::size_t i = 1; i < rec.size(); ++i) {
    if (!(rec[i].x > rec[i - 1].x)) throw Error(ErrorCode::NoConvergence, "refined nodes out of order");
  }

  WeightSet taylor, low, high;
  for (int i = 0; i < n; ++i) {
    const NodeRecord& r = rec[static_cast<std::size_t>(i)];
    WeightSet& dst = i < n_lo ? low : i >= n - n_hi ? high : taylor;
    dst.x.push_back(r.x);
    dst.log_w.push_back(r.log_scaled_weight);
  }
  const NormalizedWeights nw = normalize_general(taylor, low, high, p, opts.scheme);

  rule.nodes.reserve(rec.size());
  for (const NodeRecord& r : rec) rule.nodes.push_back(r.x);
  rule.weights = nw.low;
  rule.weights.insert(rule.weights.end(), nw.taylor.begin(), nw.taylor.end());
  rule.weights.insert(rule.weights.end(), nw.high.begin(), nw.high.end());
  rule.log_weights = nw.log_low;
  rule.log_weights.insert(rule.log_weights.end(), nw.log_taylor.begin(), nw.log_taylor.end());
  rule.log_weights.insert(rule.log_weights.end(), nw.log_high.begin(), nw.log_high.end());
  rule.scheme = nw.scheme;
  rule.flushed_underflow = nw.flushed;
  rule.refined_low = n_lo;
  rule.refined_high = n_hi;
  rule.stats = summarize(rec);
  rule.stats.sweep_up = up.count;
  rule.stats.sweep_down = down.count;
  return rule;
}

}  // namespace gaussjacobi
