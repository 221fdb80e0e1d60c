#pragma once

#include <span>
#include <vector>

#include "gaussjacobi/core.hpp"
#include "gaussjacobi/rule.hpp"

namespace gaussjacobi {

struct SymmetricRule {
  Real lambda = 0;
  std::vector<Real> nodes;           // ascending, exactly symmetric
  std::vector<Real> scaled_weights;  // 1/Y~'(x_i)^2
  std::vector<Real> weights;
  std::vector<Real> log_weights;
  Real gamma = 0;
  bool corrected_last = false;
  std::size_t flushed_underflow = 0;
  std::vector<NodeRecord> records;
  RunStats stats;

  QuadratureRule as_rule() const;
};

/// Gauss-Gegenbauer rule for (1-x^2)^lambda. The last-weight correction is
/// applied when correct_last is set and lambda < -1/2.
SymmetricRule gegenbauer_rule(int n, Real lambda, const PrecisionConfig& cfg = PrecisionConfig::defaults(),
                              bool correct_last = true);

struct SymmetricWeights {
  std::vector<Real> weights;
  std::vector<Real> log_weights;
  std::size_t flushed = 0;  // weights below the smallest normal, set to 0
  Real gamma = 0;
};

/// `nodes` is the non-negative half in increasing order, starting with 0 when
/// `odd`; `scaled` holds the matching 1/Y~'^2. Returns weights for the same
/// nodes, normalized so that the full reflected rule has mass mu_0.
SymmetricWeights normalize_symmetric(std::span<const Real> nodes, std::span<const Real> scaled, Real lambda,
                                     bool odd, bool correct_last);

/// As above with the scaled weights given by their logarithms.
SymmetricWeights normalize_symmetric_log(std::span<const Real> nodes, std::span<const Real> log_scaled,
                                         Real lambda, bool odd, bool correct_last);

}  // namespace gaussjacobi
