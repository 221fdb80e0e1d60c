#include "gaussjacobi/gegenbauer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gaussjacobi/jacobi.hpp"

namespace gaussjacobi {

QuadratureRule SymmetricRule::as_rule() const {
  QuadratureRule r;
  r.params = make_params(static_cast<int>(nodes.size()), lambda, lambda);
  r.nodes = nodes;
  r.weights = weights;
  r.log_weights = log_weights;
  r.flushed_underflow = flushed_underflow;
  r.records = records;
  r.stats = stats;
  r.scheme = corrected_last ? NormalizationScheme::CorrectedLast
                            : nodes.size() == 1 ? NormalizationScheme::ClosedForm : NormalizationScheme::Mu0;
  return r;
}

namespace {

const Real kLogMinNormal = std::log(std::numeric_limits<Real>::min());

void finish(SymmetricWeights& out) {
  for (std::size_t i = 0; i < out.log_weights.size(); ++i) {
    if (out.log_weights[i] < kLogMinNormal) {
      out.weights[i] = 0;
      ++out.flushed;
    } else {
      out.weights[i] = std::exp(out.log_weights[i]);
    }
  }
}

}  // namespace

namespace {

void check_inputs(std::span<const Real> nodes, std::size_t weights, bool odd) {
  if (nodes.size() != weights) {
    throw Error(ErrorCode::LengthMismatch, "normalize_symmetric: node and weight counts differ");
  }
  if (nodes.empty()) throw Error(ErrorCode::DomainError, "normalize_symmetric: no nodes");
  if (odd && nodes.front() != 0) throw Error(ErrorCode::DomainError, "normalize_symmetric: odd rule needs node 0 first");
}

/// Coefficient of the unknown last weight in the rule normalized to mass 2,
/// fixed by the second even moment 1/(2 lambda + 3). S0 and Sx2 are the
/// zeroth and second half-moments of the other terms.
Real last_weight_gamma(Real xm2, Real S0, Real Sx2, Real lambda) {
  const Real den = xm2 * S0 - Sx2;
  if (!(std::abs(den) > 1e3 * std::numeric_limits<Real>::epsilon() * (xm2 * S0 + Sx2))) {
    throw Error(ErrorCode::SingularNormalization, "normalize_symmetric: singular last-weight system");
  }
  const Real g = (xm2 - 1 / (2 * lambda + 3)) / den;
  if (!(g > 0) || !(1 - g * S0 > 0)) {
    throw Error(ErrorCode::SingularNormalization, "normalize_symmetric: non-positive weight");
  }
  return g;
}

/// Log-domain normalization of the terms lt_i = log((1-x_i^2)^lambda omega_i).
SymmetricWeights normalize_terms_log(std::span<const Real> nodes, const std::vector<Real>& lt, Real lambda, bool odd,
                                     bool correct_last) {
  const std::size_t M = nodes.size();
  const Real log_mu0 = log_moment0(lambda, lambda);
  const std::size_t mult0 = odd ? 1 : 2;  // node 0 appears once, others twice
  SymmetricWeights out;
  out.weights.assign(M, 0);
  out.log_weights.assign(M, 0);

  const std::size_t positive = odd ? M - 1 : M;
  if (!correct_last || positive == 0) {
    const Real m = *std::max_element(lt.begin(), lt.end());
    Real S = 0;
    for (std::size_t i = 0; i < M; ++i) S += (i == 0 ? mult0 : 2) * std::exp(lt[i] - m);
    const Real shift = log_mu0 - std::log(S) - m;
    for (std::size_t i = 0; i < M; ++i) out.log_weights[i] = lt[i] + shift;
    out.gamma = std::exp(shift);
    finish(out);
    return out;
  }

  const Real mu0 = std::exp(log_mu0);
  if (!std::isfinite(mu0)) throw Error(ErrorCode::Overflow, "normalize_symmetric: mu_0 out of range");
  if (M == 1) {
    // n = 2: the single positive weight is fixed by mu_0 alone.
    out.log_weights[0] = log_mu0 - std::log(Real(2));
    out.gamma = mu0 / (2 * std::exp(lt[0]));
    finish(out);
    return out;
  }
  const std::size_t last = M - 1;
  const Real m = *std::max_element(lt.begin(), lt.begin() + static_cast<std::ptrdiff_t>(last));
  Real S0 = 0, Sx2 = 0;
  for (std::size_t i = 0; i < last; ++i) {
    const Real t = std::exp(lt[i] - m) * (odd && i == 0 ? Real(0.5) : Real(1));
    S0 += t;
    Sx2 += nodes[i] * nodes[i] * t;
  }
  const Real g = last_weight_gamma(nodes[last] * nodes[last], S0, Sx2, lambda);
  const Real base = log_mu0 - std::log(Real(2));
  for (std::size_t i = 0; i < last; ++i) out.log_weights[i] = base + std::log(g) + lt[i] - m;
  out.log_weights[last] = base + std::log1p(-g * S0);
  out.gamma = mu0 / 2 * g * std::exp(-m);
  finish(out);
  return out;
}

/// Same normalization on the terms themselves. Used when every term and mu_0
/// are normal numbers, so that a common factor cancels to rounding. Sums run
/// in extended precision; the last-weight correction is a difference of
/// nearly equal moments.
SymmetricWeights normalize_terms_linear(std::span<const Real> nodes, const std::vector<Real>& t, Real lambda, bool odd,
                                        bool correct_last) {
  using E = long double;
  const std::size_t M = nodes.size();
  const E mu0 = moment(lambda, lambda, 0);
  SymmetricWeights out;
  out.weights.assign(M, 0);
  out.log_weights.assign(M, 0);
  const std::size_t positive = odd ? M - 1 : M;
  if (!correct_last || positive == 0) {
    E S = 0;
    for (std::size_t i = 0; i < M; ++i) S += (i == 0 && odd ? 1 : 2) * E(t[i]);
    const E gamma = mu0 / S;
    out.gamma = static_cast<Real>(gamma);
    for (std::size_t i = 0; i < M; ++i) out.weights[i] = static_cast<Real>(gamma * t[i]);
  } else if (M == 1) {
    out.weights[0] = static_cast<Real>(mu0 / 2);
    out.gamma = static_cast<Real>(mu0 / (2 * E(t[0])));
  } else {
    const std::size_t last = M - 1;
    E S0 = 0, Sx2 = 0;
    for (std::size_t i = 0; i < last; ++i) {
      const E ti = E(t[i]) * (odd && i == 0 ? E(0.5) : E(1));
      const E x = nodes[i];
      S0 += ti;
      Sx2 += x * x * ti;
    }
    const E xm = nodes[last];
    const E xm2 = xm * xm;
    const E den = xm2 * S0 - Sx2;
    if (!(den > 1e3 * std::numeric_limits<Real>::epsilon() * (xm2 * S0 + Sx2))) {
      throw Error(ErrorCode::SingularNormalization, "normalize_symmetric: singular last-weight system");
    }
    const E g = (xm2 - 1 / (2 * E(lambda) + 3)) / den;
    const E wm = 1 - g * S0;
    if (!(g > 0) || !(wm > 0)) {
      throw Error(ErrorCode::SingularNormalization, "normalize_symmetric: non-positive weight");
    }
    const E gamma = mu0 / 2 * g;
    out.gamma = static_cast<Real>(gamma);
    for (std::size_t i = 0; i < last; ++i) out.weights[i] = static_cast<Real>(gamma * t[i]);
    out.weights[last] = static_cast<Real>(mu0 / 2 * wm);
  }
  for (std::size_t i = 0; i < M; ++i) {
    if (out.weights[i] < std::numeric_limits<Real>::min()) {
      out.weights[i] = 0;
      ++out.flushed;
    }
    out.log_weights[i] = std::log(out.weights[i]);
  }
  return out;
}

bool all_normal(const std::vector<Real>& v) {
  return std::all_of(v.begin(), v.end(), [](Real t) { return std::isnormal(t); });
}

}  // namespace

SymmetricWeights normalize_symmetric_log(std::span<const Real> nodes, std::span<const Real> log_scaled, Real lambda,
                                         bool odd, bool correct_last) {
  check_inputs(nodes, log_scaled.size(), odd);
  std::vector<Real> lt(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) lt[i] = lambda * std::log1p(-nodes[i] * nodes[i]) + log_scaled[i];
  return normalize_terms_log(nodes, lt, lambda, odd, correct_last);
}

SymmetricWeights normalize_symmetric(std::span<const Real> nodes, std::span<const Real> scaled, Real lambda, bool odd,
                                     bool correct_last) {
  check_inputs(nodes, scaled.size(), odd);
  std::vector<Real> t(nodes.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    if (!(scaled[i] > 0)) throw Error(ErrorCode::DomainError, "normalize_symmetric: scaled weights must be positive");
    const Real x = nodes[i];
    t[i] = std::pow((1 - x) * (1 + x), lambda) * scaled[i];
  }
  if (all_normal(t) && std::isnormal(moment(lambda, lambda, 0))) {
    return normalize_terms_linear(nodes, t, lambda, odd, correct_last);
  }
  std::vector<Real> ls(scaled.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) ls[i] = std::log(scaled[i]);
  return normalize_symmetric_log(nodes, ls, lambda, odd, correct_last);
}

SymmetricRule gegenbauer_rule(int n, Real lambda, const PrecisionConfig& cfg, bool correct_last) {
  cfg.validate();
  const QuadParams p = make_params(n, lambda, lambda);
  SymmetricRule rule;
  rule.lambda = lambda;

  if (n == 1) {
    NodeRecord r;
    r.source = NodeSource::Seed;
    rule.nodes = {0};
    rule.scaled_weights = {1};
    rule.weights = {moment(lambda, lambda, 0)};
    rule.log_weights = {log_moment0(lambda, lambda)};
    rule.gamma = rule.weights[0];
    rule.records = {r};
    rule.stats = summarize(rule.records);
    return rule;
  }

  const bool odd = n % 2 == 1;
  const int half = n / 2;
  const TaylorSeed seed = odd ? TaylorSeed{0, 0, 1} : TaylorSeed{0, 1, 0};
  const SweepOutput sw = sweep_from_xe(p, seed, half, cfg);
  if (sw.count != half) {
    throw Error(ErrorCode::CountMismatch, "sweep found " + std::to_string(sw.count) + " positive nodes, expected " +
                                              std::to_string(half));
  }

  // Non-negative half: [0,] x_1 < ... < x_m.
  std::vector<Real> hx, hls, hlt;
  std::vector<NodeRecord> hrec;
  if (odd) {
    hx.push_back(0);
    hls.push_back(0);  // omega_0 = 1/Y~'(0)^2 = 1
    hlt.push_back(0);
    NodeRecord r;
    r.source = NodeSource::Seed;
    hrec.push_back(r);
  }
  for (int i = 0; i < half; ++i) {
    hx.push_back(sw.nodes[i]);
    const Real x = sw.nodes[i], dx = sw.shifts[i];
    hls.push_back(sw.log_omegas[i]);
    hlt.push_back(lambda * (std::log((1 - x) - dx) + std::log((1 + x) + dx)) + hls.back());
    NodeRecord r;
    r.x = sw.nodes[i];
    r.log_scaled_weight = hls.back();
    r.iters = sw.iters[i];
    r.taylor_terms = sw.taylor_terms[i];
    hrec.push_back(r);
  }
  rule.corrected_last = correct_last && lambda < Real(-0.5);
  const SymmetricWeights hw = normalize_terms_log(hx, hlt, lambda, odd, rule.corrected_last);
  rule.gamma = hw.gamma;
  rule.flushed_underflow = 2 * hw.flushed - (odd && hw.log_weights[0] < kLogMinNormal ? 1 : 0);

  // Reflect.
  const std::size_t H = hx.size();
  rule.nodes.reserve(static_cast<std::size_t>(n));
  for (std::size_t k = H; k-- > (odd ? 1u : 0u);) {
    rule.nodes.push_back(-hx[k]);
    rule.weights.push_back(hw.weights[k]);
    rule.log_weights.push_back(hw.log_weights[k]);
    rule.scaled_weights.push_back(std::exp(hls[k]));
    NodeRecord r = hrec[k];
    r.x = -r.x;
    rule.records.push_back(r);
  }
  for (std::size_t k = 0; k < H; ++k) {
    rule.nodes.push_back(hx[k]);
    rule.weights.push_back(hw.weights[k]);
    rule.log_weights.push_back(hw.log_weights[k]);
    rule.scaled_weights.push_back(std::exp(hls[k]));
    rule.records.push_back(hrec[k]);
  }
  rule.stats = summarize(hrec);
  rule.stats.sweep_up = half;
  rule.stats.sweep_down = half;
  return rule;
}

}  // namespace gaussjacobi
