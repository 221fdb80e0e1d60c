#include "gaussjacobi/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "gaussjacobi/gegenbauer.hpp"
#include "gaussjacobi/jacobi.hpp"
#include "gaussjacobi/oracle.hpp"

namespace gaussjacobi::cli {

std::string format_real(Real v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

bool use_symmetric(const CliRequest& req) {
  return req.alpha == req.beta && req.refine != "on" && req.normalization == "auto";
}

QuadratureRule fixedpoint_rule(const CliRequest& req) {
  const PrecisionConfig cfg = PrecisionConfig::defaults();
  if (use_symmetric(req)) return gegenbauer_rule(req.n, req.alpha, cfg, req.refine != "on").as_rule();
  JacobiOptions opts;
  opts.refine = req.refine == "on" ? RefineMode::Force : req.refine == "off" ? RefineMode::Off : RefineMode::Auto;
  if (req.normalization == "mu0") opts.scheme = NormalizationScheme::Mu0WithExplicitK;
  if (req.normalization == "moments") opts.scheme = NormalizationScheme::ThreeMoments;
  opts.parallel_sweeps = req.threads > 1;
  return jacobi_rule(req.n, req.alpha, req.beta, cfg, opts);
}

/// Runs `body` with the output stream selected by req.out, mapping library
/// errors to exit codes.
template <class Body>
int guarded(const CliRequest& req, std::ostream& out, std::ostream& err, Body body) {
  try {
    make_params(req.n, req.alpha, req.beta);
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  std::ofstream file;
  std::ostream* os = &out;
  if (!req.out.empty()) {
    file.open(req.out, std::ios::binary);
    if (!file) {
      err << "usage error: cannot open " << req.out << "\n";
      return kUsage;
    }
    os = &file;
  }
  try {
    return body(*os);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kNumerical;
  }
}

}  // namespace

QuadratureRule compute_rule(const CliRequest& req) {
  if (req.method == "gw") return golub_welsch(make_params(req.n, req.alpha, req.beta));
  return fixedpoint_rule(req);
}

void write_rule(std::ostream& os, const QuadratureRule& rule, const CliRequest& req) {
  if (req.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = rule.params.n;
    j["alpha"] = rule.params.alpha;
    j["beta"] = rule.params.beta;
    j["method"] = req.method;
    j["scheme"] = std::string(to_string(rule.scheme));
    j["nodes"] = rule.nodes;
    j["weights"] = rule.weights;
    j["stats"] = {{"mean_iters", rule.stats.mean_iters},
                  {"max_iters", rule.stats.max_iters},
                  {"mean_terms", rule.stats.mean_terms},
                  {"max_terms", rule.stats.max_terms}};
    j["flushed_underflow_count"] = rule.flushed_underflow;
    os << j.dump(2) << "\n";
    return;
  }
  const char sep = req.format == "csv" ? ',' : ' ';
  if (req.format == "csv") os << "x,w\n";
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    os << format_real(rule.nodes[i]) << sep << format_real(rule.weights[i]) << "\n";
  }
}

int run_compute(const CliRequest& req, std::ostream& out, std::ostream& err) {
  return guarded(req, out, err, [&](std::ostream& os) {
    write_rule(os, compute_rule(req), req);
    return int(kOk);
  });
}

int run_compare(const CliRequest& req, std::ostream& out, std::ostream& err) {
  if (req.n > kOracleMaxDegree) {
    err << "usage error: compare needs n <= " << kOracleMaxDegree << "\n";
    return kUsage;
  }
  return guarded(req, out, err, [&](std::ostream& os) {
    CliRequest fp = req;
    fp.method = "fixedpoint";
    const QuadratureRule a = compute_rule(fp);
    const QuadratureRule b = golub_welsch(make_params(req.n, req.alpha, req.beta));
    const RuleComparison c = compare_rules(a, b);
    os << format_real(c.eps_mr_nodes) << " " << format_real(c.eps_rm_weights) << " "
       << format_real(c.eps_mr_weights) << "\n";
    if (req.tol && !(std::max({c.eps_mr_nodes, c.eps_rm_weights}) <= *req.tol)) return int(kCheckFailed);
    return int(kOk);
  });
}

int run_stats(const CliRequest& req, std::ostream& out, std::ostream& err) {
  if (req.method != "fixedpoint") {
    err << "usage error: stats needs --method fixedpoint\n";
    return kUsage;
  }
  return guarded(req, out, err, [&](std::ostream& os) {
    const QuadratureRule r = compute_rule(req);
    os << "mean_iters " << format_real(r.stats.mean_iters) << "\n"
       << "max_iters " << r.stats.max_iters << "\n"
       << "mean_terms " << format_real(r.stats.mean_terms) << "\n"
       << "max_terms " << r.stats.max_terms << "\n";
    return int(kOk);
  });
}

int run_check(const CliRequest& req, std::ostream& out, std::ostream& err) {
  if (req.n > 40) {
    err << "usage error: check needs n <= 40\n";
    return kUsage;
  }
  return guarded(req, out, err, [&](std::ostream& os) {
    const QuadratureRule r = compute_rule(req);
    const Real defect = exactness_check(r, r.params, 2 * req.n - 1);
    os << "defect " << format_real(defect) << "\n";
    return defect <= req.tol.value_or(1e-10) ? int(kOk) : int(kCheckFailed);
  });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss-Jacobi quadrature rules by a fourth-order fixed-point method"};
  app.require_subcommand(1);
  CliRequest req;
  std::optional<double> tol;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", req.n, "number of nodes")->required()->check(CLI::Range(1, 100000000));
    sub->add_option("--alpha", req.alpha, "exponent of (1-x)")->default_val(0);
    sub->add_option("--beta", req.beta, "exponent of (1+x)")->default_val(0);
    sub->add_option("--method", req.method)->check(CLI::IsMember({"fixedpoint", "gw"}))->default_val("fixedpoint");
    sub->add_option("--refine", req.refine)->check(CLI::IsMember({"auto", "on", "off"}))->default_val("auto");
    sub->add_option("--normalization", req.normalization)
        ->check(CLI::IsMember({"auto", "mu0", "moments"}))
        ->default_val("auto");
    sub->add_option("--format", req.format)->check(CLI::IsMember({"text", "json", "csv"}))->default_val("text");
    sub->add_option("--out", req.out, "output file (default stdout)");
    sub->add_option("--tol", tol, "pass threshold for check and compare");
    sub->add_option("--threads", req.threads, "run the two sweeps concurrently when > 1")
        ->check(CLI::PositiveNumber)
        ->default_val(1);
  };
  for (const char* name : {"compute", "compare", "stats", "check"}) {
    add_common(app.add_subcommand(name));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int(kOk) : int(kUsage);
  }
  req.tol = tol;
  req.subcommand = app.get_subcommands().front()->get_name();
  if (req.subcommand == "compute") return run_compute(req, out, err);
  if (req.subcommand == "compare") return run_compare(req, out, err);
  if (req.subcommand == "stats") return run_stats(req, out, err);
  return run_check(req, out, err);
}

}  // namespace gaussjacobi::cli
