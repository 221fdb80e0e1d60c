#include "gaussjacobi/rule.hpp"

#include <algorithm>

namespace gaussjacobi {

std::string_view to_string(NodeSource s) {
  switch (s) {
    case NodeSource::TaylorSweep: return "taylor-sweep";
    case NodeSource::AngularRefined: return "angular-refined";
    case NodeSource::Seed: return "seed";
  }
  return "unknown";
}

std::string_view to_string(NormalizationScheme s) {
  switch (s) {
    case NormalizationScheme::Mu0: return "mu0";
    case NormalizationScheme::Mu0WithExplicitK: return "mu0-explicit-k";
    case NormalizationScheme::ThreeMoments: return "three-moments";
    case NormalizationScheme::CorrectedLast: return "corrected-last";
    case NormalizationScheme::ClosedForm: return "closed-form";
  }
  return "unknown";
}

RunStats summarize(const std::vector<NodeRecord>& records) {
  RunStats s;
  long long iters = 0, terms = 0;
  int count = 0;
  for (const NodeRecord& r : records) {
    if (r.source == NodeSource::Seed) {
      s.seed_is_node = true;
      continue;
    }
    ++count;
    iters += r.iters;
    terms += r.taylor_terms;
    s.max_iters = std::max(s.max_iters, r.iters);
    s.max_terms = std::max(s.max_terms, r.taylor_terms);
  }
  if (count > 0) {
    s.mean_iters = static_cast<double>(iters) / count;
    s.mean_terms = static_cast<double>(terms) / count;
  }
  return s;
}

}  // namespace gaussjacobi
