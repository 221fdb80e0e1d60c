#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gaussjacobi/core.hpp"
#include "gaussjacobi/odekernel.hpp"
#include "gaussjacobi/rule.hpp"

namespace gaussjacobi {

/// Starting data at x_e. When x_e is itself a node the seed is (x_e, 0, 1)
/// and is_node is set.
struct XeSeed {
  TaylorSeed seed;
  bool is_node = false;
};

XeSeed seed_at_xe(const QuadParams& p);

enum class SweepTermination { OmegaNonpositive, BoundaryGuard, CountCap };

struct SweepOutput {
  std::vector<Real> nodes;  // increasing, all > seed.x
  std::vector<Real> yprimes;
  // Sub-ulp Newton correction to each node and the log scaled weight
  // evaluated at the corrected node.
  std::vector<Real> shifts;
  std::vector<Real> log_omegas;
  std::vector<int> iters;
  std::vector<int> taylor_terms;
  int count = 0;
  SweepTermination terminated_by = SweepTermination::CountCap;
};

/// Forward sweep towards x = 1 starting at `seed`. A seed with y == 0 is
/// treated as a node already registered by the caller.
SweepOutput sweep_from_xe(const QuadParams& p, const TaylorSeed& seed, int max_nodes,
                          const PrecisionConfig& cfg = PrecisionConfig::defaults());

enum class RefineMode { Auto, Off, Force };

struct JacobiOptions {
  RefineMode refine = RefineMode::Auto;
  // Overrides the -3/4 switch between the two normalization schemes.
  std::optional<NormalizationScheme> scheme;
  bool parallel_sweeps = false;
};

using GeneralRule = QuadratureRule;

GeneralRule jacobi_rule(int n, Real alpha, Real beta, const PrecisionConfig& cfg = PrecisionConfig::defaults(),
                        const JacobiOptions& opts = {});

/// Nodes with unnormalized weights kept as logarithms.
struct WeightSet {
  std::vector<Real> x;
  std::vector<Real> log_w;
  bool empty() const { return x.empty(); }
};

struct NormalizedWeights {
  std::vector<Real> taylor;
  std::vector<Real> low;
  std::vector<Real> high;
  std::vector<Real> log_taylor;
  std::vector<Real> log_low;
  std::vector<Real> log_high;
  NormalizationScheme scheme = NormalizationScheme::Mu0WithExplicitK;
  std::size_t flushed = 0;  // weights below the smallest normal, set to 0
};

/// Mu0WithExplicitK: the refined sets are taken as absolute and the Taylor
/// set is scaled to complete mu_0. ThreeMoments: one unknown scale per
/// non-empty set, fixed by mu_0, mu_1, mu_2.
NormalizedWeights normalize_general(const WeightSet& taylor, const WeightSet& low, const WeightSet& high,
                                    const QuadParams& p, std::optional<NormalizationScheme> scheme = std::nullopt);

/// Weight of the node at x = cos(theta) from the explicit formula with K.
Real extreme_weight(const QuadParams& p, Real theta);
Real log_extreme_weight(const QuadParams& p, Real theta);

/// Number of extreme nodes refined at each end for degree n.
int extreme_count(int n);

}  // namespace gaussjacobi
