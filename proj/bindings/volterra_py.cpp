// Python bindings for the core library. The surface mirrors the CLI: each
// function returns plain Python scalars, lists, or dicts so no runtime
// dependency beyond the interpreter is needed.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "volterra/accretivity.hpp"
#include "volterra/analytic_spectra.hpp"
#include "volterra/commands.hpp"
#include "volterra/discretizer.hpp"
#include "volterra/errors.hpp"
#include "volterra/kernels.hpp"
#include "volterra/norm_bounds.hpp"
#include "volterra/numerical_range.hpp"
#include "volterra/pencil_spectra.hpp"
#include "volterra/tolerances.hpp"
#include "volterra/verify.hpp"

namespace py = pybind11;
using namespace volterra;

namespace {

// Route an explicit part string through the pencil preconditions.
PencilPair build_pencil_checked(PartSelector part, int n) {
  const bool covered = (part == PartSelector::RealPart && n % 2 == 1) ||
                       (part == PartSelector::ImagPart && n % 2 == 0);
  if (!covered)
    throw std::invalid_argument(
        "pencil_spectrum covers re with odd n and im with even n");
  return build_pencil(n);
}

std::vector<double> py_discretized_spectrum(const std::string& part, int n,
                                            int m) {
  const PartSelector p = parse_part(part);
  const OperatorMatrix M = assemble({p, n}, make_grid(m));
  if (M.structure == MatrixStructure::Symmetric)
    return eigenvalues_symmetric(M).values;
  if (M.structure == MatrixStructure::Antisymmetric)
    return eigenvalues_antisymmetric(M).values;
  throw std::invalid_argument(
      "discretized_spectrum needs a self-adjoint part: re or im");
}

py::dict py_certify(double a, double b, int m) {
  const AccretivityVerdict v = certify_numeric({a, b}, m);
  py::dict out;
  out["predicate"] = v.predicate;
  out["min_eig"] = *v.min_eig_certificate;
  if (v.witness) {
    out["witness"] = v.witness->kind == WitnessKind::XMinusHalf
                         ? std::string("x-minus-half")
                         : "spike(" + std::to_string(v.witness->spike_index) +
                               ")";
    out["witness_rayleigh"] = witness_rayleigh({a, b}, *v.witness, m);
  } else {
    out["witness"] = py::none();
  }
  return out;
}

py::dict py_verify(const std::string& level) {
  const ReportDoc doc = run_verification(parse_verify_level(level));
  py::list failures;
  for (const CheckRecord& c : doc.checks)
    if (!c.pass) failures.append(c.name);
  py::dict out;
  out["pass"] = doc.overall();
  out["checks"] = doc.checks.size();
  out["failures"] = failures;
  return out;
}

}  // namespace

PYBIND11_MODULE(_volterra, mod) {
  // bad selector strings and incompatible routes surface as ValueError,
  // matching the invalid_argument paths
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const UsageError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  mod.doc() =
      "Spectra, norms, numerical ranges, and accretivity of powers of the "
      "integration operator V f(x) = integral of f from 0 to x on L2[0,1]";
  mod.attr("__version__") = "1.0.0";

  mod.def("solve_coth_eq", [] { return solve_coth_eq(); },
          "positive root of coth(t) = t");
  mod.def("solve_cot_family",
          [](int count) { return solve_cot_family(count); }, py::arg("count"),
          "first positive roots of cot(t) = -t");

  mod.def(
      "pencil_spectrum",
      [](const std::string& part, int n) {
        return pencil_eigenvalues(build_pencil_checked(parse_part(part), n))
            .values;
      },
      py::arg("part"), py::arg("n"),
      "exact nonzero eigenvalues of Re V^n (n odd) or Im V^n (n even)");
  mod.def(
      "imv_spectrum",
      [](int count) { return imv_eigenvalues(count).values; },
      py::arg("count") = 5,
      "eigenvalues 1/((2k+1) pi) of Im V, both signs, largest first");
  mod.def(
      "rev2_spectrum", [](int count) { return rev2_eigenvalues(count).values; },
      py::arg("count") = 8,
      "merged analytic eigenvalue families of Re V^2, largest first");
  mod.def("discretized_spectrum", &py_discretized_spectrum, py::arg("part"),
          py::arg("n"), py::arg("m") = tol::kGridDefault,
          "eigenvalues of the grid discretization of Re/Im V^n");

  mod.def("hs_vn", [](int n) { return hs_vn(n); }, py::arg("n"),
          "Hilbert-Schmidt norm of V^n");
  mod.def("hs_re_im", [](int n) { return hs_re_im(n); }, py::arg("n"),
          "Hilbert-Schmidt norm of Re V^n and Im V^n");
  mod.def(
      "opnorm_bounds",
      [](const std::string& part, int n) {
        const PartSelector p = parse_part(part);
        const BoundPair b = p == PartSelector::RealPart ? opnorm_bounds_re(n)
                            : p == PartSelector::ImagPart
                                ? opnorm_bounds_im(n)
                                : opnorm_bounds_vn(n);
        return std::make_pair(b.lower, b.upper);
      },
      py::arg("part"), py::arg("n"),
      "closed-form operator-norm bracket (lower, upper)");
  mod.def(
      "known_exact_opnorms",
      [] {
        std::vector<std::tuple<std::string, int, double>> out;
        for (const ExactOpNorm& e : known_exact_opnorms())
          out.emplace_back(e.part == PartSelector::RealPart ? "re" : "im",
                           e.n, e.value);
        return out;
      },
      "the six known exact operator norms as (part, n, value)");
  mod.def(
      "op_norm_discretized",
      [](const std::string& part, int n, int m) {
        return op_norm(assemble({parse_part(part), n}, make_grid(m)));
      },
      py::arg("part"), py::arg("n"), py::arg("m") = tol::kGridDefault,
      "largest singular value of the grid discretization");

  mod.def(
      "range_interval",
      [](const std::string& part, int n, int m) {
        const Interval iv = range_interval(parse_part(part), n, m);
        return std::make_pair(iv.lo, iv.hi);
      },
      py::arg("part"), py::arg("n"), py::arg("m") = tol::kGridDefault,
      "closed numerical-range interval of Re/Im V^n");
  mod.def(
      "brown_curve",
      [](int samples) {
        std::vector<std::tuple<double, double, double>> out;
        for (const CurveSample& s : brown_curve(samples))
          out.emplace_back(s.t, s.upper.x, s.upper.y);
        return out;
      },
      py::arg("samples") = tol::kCurveSamplesDefault,
      "upper boundary samples (t, x, y) of the numerical range of V");
  mod.def("rayleigh_probe_re", [](int n) { return rayleigh_probe_re(n); },
          py::arg("n"),
          "Rayleigh quotient of Re V^n at the probe f(x) = 1 - 2x");

  mod.def(
      "is_accretive", [](double a, double b) {
        return is_accretive_quadratic({a, b});
      },
      py::arg("a"), py::arg("b"),
      "the closed-form criterion: b <= 0 and 2a + b >= 0");
  mod.def("certify_accretive", &py_certify, py::arg("a"), py::arg("b"),
          py::arg("m") = tol::kAccretiveGrid,
          "numeric certificate dict for a V + b V^2");
  mod.def(
      "resolvent_norm",
      [](double a, double b, int m) {
        return resolvent_norm_check({a, b}, m);
      },
      py::arg("a"), py::arg("b"), py::arg("m") = tol::kAccretiveGrid,
      "operator norm of (I + a V + b V^2)^{-1} on the grid");

  mod.def(
      "double_integral",
      [](int n, int m) { return double_integral_quadrature(n, m); },
      py::arg("n"), py::arg("m") = tol::kDoubleIntGrid,
      "midpoint quadrature of the square integral of (x-t)^(2n-2)");
  mod.def("verify", &py_verify, py::arg("level") = "fast",
          "run the verification suite; returns {pass, checks, failures}");
}
