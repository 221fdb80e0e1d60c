#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gaussjacobi/core.hpp"
#include "gaussjacobi/rule.hpp"

namespace gaussjacobi::cli {

enum Exit : int { kOk = 0, kUsage = 1, kNumerical = 2, kCheckFailed = 3 };

struct CliRequest {
  std::string subcommand = "compute";  // compute | compare | stats | check
  int n = 0;
  Real alpha = 0;
  Real beta = 0;
  std::string method = "fixedpoint";    // fixedpoint | gw
  std::string refine = "auto";          // auto | on | off
  std::string normalization = "auto";   // auto | mu0 | moments
  std::string format = "text";          // text | json | csv
  std::string out;                      // empty: stdout
  std::optional<Real> tol;              // pass threshold for check and compare
  int threads = 1;
};

/// Shortest decimal string that reads back to the same binary64 value.
std::string format_real(Real v);

/// The rule a request asks for. Symmetric requests without forced
/// refinement or a forced scheme go through the Gegenbauer algorithm.
QuadratureRule compute_rule(const CliRequest& req);

void write_rule(std::ostream& os, const QuadratureRule& rule, const CliRequest& req);

int run_compute(const CliRequest& req, std::ostream& out, std::ostream& err);
int run_compare(const CliRequest& req, std::ostream& out, std::ostream& err);
int run_stats(const CliRequest& req, std::ostream& out, std::ostream& err);
int run_check(const CliRequest& req, std::ostream& out, std::ostream& err);

/// Full command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaussjacobi::cli
