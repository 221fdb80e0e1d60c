#pragma once

#include <vector>

#include "gaussjacobi/core.hpp"

namespace gaussjacobi {

/// Sweep position: current iterate x with Y~(x), Y~'(x).
struct SweepState {
  Real x = 0;
  Real y = 0;
  Real yp = 0;
  int iters = 0;
  int nodes_found = 0;
  // (x, y, yp) is the state at a node just found, with y at roundoff level;
  // the search skips that node.
  bool at_node = false;
};

/// Branch-selected arctangent: arctan(z) if j z > 0, arctan(z) + j pi if
/// j z <= 0, and j pi/2 for z = +-inf.
Real arctan_branch(int j, Real zeta);

/// One application of the fourth-order fixed-point map of the x = tanh z
/// normal form, written in x. A state with y == 0 advances by pi/sqrt(Omega)
/// in z. Throws OmegaNonpositive when Omega(x) <= 0.
Real step_tanh(const QuadParams& p, const SweepState& s);

/// Why a search for the next node stopped without finding one.
enum class SweepEnd { None, OmegaNonpositive, BoundaryGuard };

struct NodeSolution {
  Real x = 0;
  Real y = 0;   // Y~ at the returned node (roundoff level)
  Real yp = 0;  // Y~' at the returned node
  int iters = 0;
  int taylor_terms = 0;
  SweepEnd end = SweepEnd::None;
};

/// Iterates visited by solve_node: x_k, Y~(x_k) and the z-step F_k taken from x_k.
struct IterateTrace {
  std::vector<Real> x;
  std::vector<Real> y;
  std::vector<Real> F;
};

/// Node search that reports the end of the sweep through NodeSolution::end
/// instead of throwing. Used by the sweeps. Past the turning point of Omega
/// the iteration continues with the hyperbolic form of the local model, so a
/// last node lying where Omega < 0 is still found.
NodeSolution find_next_node(const QuadParams& p, const SweepState& s, const PrecisionConfig& cfg,
                            IterateTrace* trace = nullptr);

/// Next node ahead of s.x. Each iterate is re-expanded by Taylor series from
/// the previous one; once a z-step satisfies |F| <= fp_tol that step is
/// taken as the last. Throws OmegaNonpositive at the end of the sweep and
/// MaxItersExceeded past cfg.max_fp_iters.
NodeSolution solve_node(const QuadParams& p, const SweepState& s,
                        const PrecisionConfig& cfg = PrecisionConfig::defaults(),
                        IterateTrace* trace = nullptr);

struct AngularRefinement {
  Real theta = 0;
  int iters = 0;
};

/// Bilateral (plain arctangent) fixed-point iteration in theta = arccos x,
/// for polishing nodes close to x = 1. Where Delta < 0 the artanh form of the
/// same map is used; DeltaNonpositive if that has no zero.
AngularRefinement refine_angular(const QuadParams& p, Real theta0,
                                 const PrecisionConfig& cfg = PrecisionConfig::defaults());

}  // namespace gaussjacobi
