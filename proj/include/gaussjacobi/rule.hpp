#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "gaussjacobi/core.hpp"

namespace gaussjacobi {

enum class NodeSource { TaylorSweep, AngularRefined, Seed };

std::string_view to_string(NodeSource s);

/// Per-node bookkeeping. theta is only meaningful for refined nodes.
struct NodeRecord {
  Real x = 0;
  Real theta = 0;
  Real log_scaled_weight = 0;  // log of the unnormalized weight
  int iters = 0;               // fixed-point steps of the sweep
  int taylor_terms = 0;
  int refine_iters = 0;
  NodeSource source = NodeSource::TaylorSweep;
};

struct RunStats {
  double mean_iters = 0;
  int max_iters = 0;
  double mean_terms = 0;
  int max_terms = 0;
  int sweep_up = 0;    // nodes found by the sweep towards x = 1
  int sweep_down = 0;  // nodes found by the sweep towards x = -1
  bool seed_is_node = false;
};

enum class NormalizationScheme { Mu0, Mu0WithExplicitK, ThreeMoments, CorrectedLast, ClosedForm };

std::string_view to_string(NormalizationScheme s);

/// Nodes ascending, with matching weights and records.
struct QuadratureRule {
  QuadParams params;
  std::vector<Real> nodes;
  std::vector<Real> weights;
  std::vector<Real> log_weights;  // ln w_i, finite even where w_i underflows
  std::vector<NodeRecord> records;
  RunStats stats;
  NormalizationScheme scheme = NormalizationScheme::Mu0;
  int refined_low = 0;
  int refined_high = 0;
  std::size_t flushed_underflow = 0;
};

/// Iteration and Taylor-term statistics over the records, seeds excluded.
RunStats summarize(const std::vector<NodeRecord>& records);

}  // namespace gaussjacobi
