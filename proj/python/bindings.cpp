#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaussjacobi/error.hpp"
#include "gaussjacobi/gegenbauer.hpp"
#include "gaussjacobi/jacobi.hpp"
#include "gaussjacobi/oracle.hpp"

namespace py = pybind11;
using namespace gaussjacobi;

namespace {

py::array_t<double> to_array(const std::vector<Real>& v) { return py::array_t<double>(v.size(), v.data()); }

JacobiOptions options(const std::string& refine, const std::string& normalization, bool parallel) {
  JacobiOptions o;
  if (refine == "on") o.refine = RefineMode::Force;
  else if (refine == "off") o.refine = RefineMode::Off;
  else if (refine != "auto") throw py::value_error("refine must be auto, on or off");
  if (normalization == "mu0") o.scheme = NormalizationScheme::Mu0WithExplicitK;
  else if (normalization == "moments") o.scheme = NormalizationScheme::ThreeMoments;
  else if (normalization != "auto") throw py::value_error("normalization must be auto, mu0 or moments");
  o.parallel_sweeps = parallel;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gauss-Jacobi quadrature by a fourth-order fixed-point method";

  static py::exception<Error> exc(m, "GaussJacobiError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  py::class_<RunStats>(m, "RunStats")
      .def_readonly("mean_iters", &RunStats::mean_iters)
      .def_readonly("max_iters", &RunStats::max_iters)
      .def_readonly("mean_terms", &RunStats::mean_terms)
      .def_readonly("max_terms", &RunStats::max_terms);

  py::class_<QuadratureRule>(m, "Rule")
      .def_property_readonly("n", [](const QuadratureRule& r) { return r.params.n; })
      .def_property_readonly("alpha", [](const QuadratureRule& r) { return r.params.alpha; })
      .def_property_readonly("beta", [](const QuadratureRule& r) { return r.params.beta; })
      .def_property_readonly("nodes", [](const QuadratureRule& r) { return to_array(r.nodes); })
      .def_property_readonly("weights", [](const QuadratureRule& r) { return to_array(r.weights); })
      .def_property_readonly("log_weights", [](const QuadratureRule& r) { return to_array(r.log_weights); })
      .def_property_readonly("scheme", [](const QuadratureRule& r) { return std::string(to_string(r.scheme)); })
      .def_readonly("stats", &QuadratureRule::stats)
      .def_readonly("flushed_underflow", &QuadratureRule::flushed_underflow)
      .def("__len__", [](const QuadratureRule& r) { return r.nodes.size(); })
      .def("__repr__", [](const QuadratureRule& r) {
        return "<Rule n=" + std::to_string(r.params.n) + " alpha=" + py::repr(py::float_(r.params.alpha)).cast<std::string>() +
               " beta=" + py::repr(py::float_(r.params.beta)).cast<std::string>() + ">";
      });

  m.def(
      "jacobi_rule",
      [](int n, double alpha, double beta, const std::string& refine, const std::string& normalization, bool parallel) {
        const JacobiOptions o = options(refine, normalization, parallel);
        py::gil_scoped_release release;
        return jacobi_rule(n, alpha, beta, PrecisionConfig::defaults(), o);
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("refine") = "auto", py::arg("normalization") = "auto",
      py::arg("parallel") = false, "Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta.");

  m.def(
      "gegenbauer_rule",
      [](int n, double lam, bool correct_last) {
        py::gil_scoped_release release;
        return gegenbauer_rule(n, lam, PrecisionConfig::defaults(), correct_last).as_rule();
      },
      py::arg("n"), py::arg("lam"), py::arg("correct_last") = true, "Gauss-Gegenbauer rule for (1-x^2)^lam.");

  m.def(
      "golub_welsch",
      [](int n, double alpha, double beta) {
        py::gil_scoped_release release;
        return golub_welsch(make_params(n, alpha, beta));
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), "Reference rule from the Jacobi matrix (n <= 10000).");

  m.def(
      "compare_rules",
      [](const QuadratureRule& a, const QuadratureRule& b) {
        const RuleComparison c = compare_rules(a, b);
        return py::make_tuple(c.eps_mr_nodes, c.eps_rm_weights, c.eps_mr_weights);
      },
      py::arg("a"), py::arg("b"), "(max rel node err, max weight err / max weight, max rel weight err)");

  m.def(
      "exactness_check",
      [](const QuadratureRule& r, int kmax) { return exactness_check(r, r.params, kmax); }, py::arg("rule"),
      py::arg("kmax"));

  m.def("moment", &moment, py::arg("alpha"), py::arg("beta"), py::arg("k"));
  m.def("log_moment0", &log_moment0, py::arg("alpha"), py::arg("beta"));
}
