#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "sharp/constants.hpp"
#include "sharp/errors.hpp"
#include "sharp/optimizer.hpp"
#include "sharp/phase.hpp"
#include "sharp/verify.hpp"

namespace py = pybind11;
using namespace sharp;
using quad::IntegralResult;
using quad::QuadSpec;

namespace {

// math.inf selects the limiting problem.
GammaParam to_gamma(double g) {
    if (std::isinf(g) && g > 0) return GammaParam::limit();
    return GammaParam::finite(g);
}

using release = py::call_guard<py::gil_scoped_release>;

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sharp CLR and Lieb-Thirring constants from the three-lines optimizer";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PoleHit>(m, "PoleHit", domain.ptr());
    py::register_exception<NonFiniteError>(m, "NonFiniteError", PyExc_ArithmeticError);
    py::register_exception<PhaseNotReal>(m, "PhaseNotReal", PyExc_RuntimeError);

    py::class_<QuadSpec>(m, "QuadSpec")
        .def(py::init([](double abs_tol, double rel_tol, int max_subdivisions, double tail_safety) {
                 QuadSpec s{abs_tol, rel_tol, max_subdivisions, tail_safety};
                 s.validate();
                 return s;
             }),
             py::arg("abs_tol") = 1e-12, py::arg("rel_tol") = 1e-10, py::arg("max_subdivisions") = 2000,
             py::arg("tail_safety") = 1.5)
        .def_readwrite("abs_tol", &QuadSpec::abs_tol)
        .def_readwrite("rel_tol", &QuadSpec::rel_tol)
        .def_readwrite("max_subdivisions", &QuadSpec::max_subdivisions)
        .def_readwrite("tail_safety", &QuadSpec::tail_safety)
        .def("__repr__", [](const QuadSpec& s) {
            std::ostringstream os;
            os << "QuadSpec(abs_tol=" << s.abs_tol << ", rel_tol=" << s.rel_tol << ")";
            return os.str();
        });

    py::class_<IntegralResult>(m, "IntegralResult")
        .def_readonly("value", &IntegralResult::value)
        .def_readonly("err_estimate", &IntegralResult::err_estimate)
        .def_readonly("converged", &IntegralResult::converged)
        .def_readonly("evaluations", &IntegralResult::evaluations)
        .def("__float__", [](const IntegralResult& r) { return r.value; })
        .def("__repr__", [](const IntegralResult& r) {
            std::ostringstream os;
            os.precision(17);
            os << "IntegralResult(value=" << r.value << ", err_estimate=" << r.err_estimate
               << ", converged=" << (r.converged ? "True" : "False") << ")";
            return os.str();
        });

    py::class_<PhaseValue>(m, "PhaseValue")
        .def_readonly("re", &PhaseValue::re)
        .def_readonly("im", &PhaseValue::im)
        .def_readonly("err_estimate", &PhaseValue::err_estimate)
        .def_readonly("converged", &PhaseValue::converged)
        .def("__complex__", [](const PhaseValue& p) { return std::complex<double>(p.re, p.im); });

    py::class_<BoundsReport>(m, "BoundsReport")
        .def_readonly("gamma", &BoundsReport::gamma)
        .def_readonly("m_gamma", &BoundsReport::m_gamma)
        .def_readonly("ratio", &BoundsReport::ratio)
        .def_readonly("clr_factor", &BoundsReport::clr_factor)
        .def_readonly("lt_factor", &BoundsReport::lt_factor)
        .def_readonly("sup_interior", &BoundsReport::sup_interior)
        .def_readonly("l2_line_sq", &BoundsReport::l2_line_sq)
        .def_readonly("err_estimate", &BoundsReport::err_estimate)
        .def_readonly("converged", &BoundsReport::converged);

    py::class_<OptimizerNorms>(m, "OptimizerNorms")
        .def_readonly("sup_interior", &OptimizerNorms::sup_interior)
        .def_readonly("sup_boundary", &OptimizerNorms::sup_boundary)
        .def_readonly("l2_line_sq", &OptimizerNorms::l2_line_sq)
        .def_readonly("err_estimate", &OptimizerNorms::err_estimate)
        .def_readonly("converged", &OptimizerNorms::converged);

    py::class_<PrimalNorms>(m, "PrimalNorms")
        .def_readonly("l1_lower", &PrimalNorms::l1_lower)
        .def_readonly("l2_sq_middle", &PrimalNorms::l2_sq_middle);

    py::class_<LowGammaDiagnostic>(m, "LowGammaDiagnostic")
        .def_readonly("value", &LowGammaDiagnostic::value)
        .def_readonly("err_estimate", &LowGammaDiagnostic::err_estimate)
        .def_readonly("converged", &LowGammaDiagnostic::converged)
        .def_readonly("conditioning_warning", &LowGammaDiagnostic::conditioning_warning);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("gamma", &VerificationReport::gamma)
        .def_readonly("m_gamma", &VerificationReport::m_gamma)
        .def_readonly("err_estimate", &VerificationReport::err_estimate)
        .def_readonly("el_residual_max", &VerificationReport::el_residual_max)
        .def_readonly("el_residual_argmax", &VerificationReport::el_residual_argmax)
        .def_readonly("duality_gap_rel", &VerificationReport::duality_gap_rel)
        .def_readonly("lower_sandwich", &VerificationReport::lower_sandwich)
        .def_readonly("upper_sandwich", &VerificationReport::upper_sandwich)
        .def_readonly("has_low_gamma", &VerificationReport::has_low_gamma)
        .def_readonly("low_gamma_value", &VerificationReport::low_gamma_value)
        .def_readonly("conditioning_warning", &VerificationReport::conditioning_warning)
        .def_readonly("converged", &VerificationReport::converged)
        .def_readonly("passed", &VerificationReport::pass)
        .def_readonly("failures", &VerificationReport::failures);

    const auto spec = py::arg("spec") = QuadSpec{};

    // Phase.
    m.def("g_gamma", [](double g, double k) { return g_gamma(to_gamma(g), k); }, py::arg("gamma"), py::arg("k"));
    m.def("theta", [](double g, double x, double y, const QuadSpec& s) { return theta(to_gamma(g), StripPoint::make(x, y), s); },
          py::arg("gamma"), py::arg("x"), py::arg("y"), spec, release());
    m.def("re_theta", [](double g, double x, double y, const QuadSpec& s) { return re_theta(to_gamma(g), x, y, s); },
          py::arg("gamma"), py::arg("x"), py::arg("y"), spec, release());
    m.def("im_theta", [](double g, double x, double y, const QuadSpec& s) { return im_theta(to_gamma(g), x, y, s); },
          py::arg("gamma"), py::arg("x"), py::arg("y"), spec, release());

    // Optimizer.
    m.def("blaschke", [](double g, std::complex<double> z) { return blaschke(to_gamma(g), z); }, py::arg("gamma"),
          py::arg("z"));
    m.def("h", [](double g, double x, double y, const QuadSpec& s) { return h_eval(to_gamma(g), StripPoint::make(x, y), s); },
          py::arg("gamma"), py::arg("x"), py::arg("y"), spec, release());
    m.def("f_gamma", [](double g, double x) { return f_gamma(to_gamma(g), x); }, py::arg("gamma"), py::arg("x"));
    m.def("optimizer_norms", [](double g, const QuadSpec& s) { return optimizer_norms(to_gamma(g), s); },
          py::arg("gamma"), spec, release());
    m.def("beta_constant", [](double g, const QuadSpec& s) { return beta_constant(to_gamma(g), s); }, py::arg("gamma"),
          spec, release());
    m.def("primal_norms", [](double g, const QuadSpec& s) { return primal_norms(to_gamma(g), s); }, py::arg("gamma"),
          spec, release());

    // Constants.
    m.def("m_gamma", [](double g, const QuadSpec& s) { return m_gamma(to_gamma(g), s); }, py::arg("gamma"), spec,
          release());
    m.def("bounds_report", [](double g, const QuadSpec& s) { return bounds_report(to_gamma(g), s); }, py::arg("gamma"),
          spec, release());
    m.def("clr_factor", [](int d, double sigma, const QuadSpec& s) { return clr_factor(PhysicalQuery::make(d, sigma), s); },
          py::arg("d"), py::arg("sigma"), spec, release());
    m.def("lt_factor", [](int d, double sigma, const QuadSpec& s) { return lt_factor(PhysicalQuery::make(d, sigma), s); },
          py::arg("d"), py::arg("sigma"), spec, release());
    m.def("c_d_sigma", [](int d, double sigma, const QuadSpec& s) { return c_d_sigma(PhysicalQuery::make(d, sigma), s); },
          py::arg("d"), py::arg("sigma"), spec, release());
    m.def("clr_asymptotic", &clr_asymptotic, spec, release());
    m.def("clr_factor_at", &clr_factor_at, py::arg("gamma"), py::arg("m"));
    m.def("lt_factor_at", &lt_factor_at, py::arg("gamma"), py::arg("m"));
    m.def("scaling_constant",
          [](double g, double p, double q, double a) { return scaling_constant(to_gamma(g), p, q, a); },
          py::arg("gamma"), py::arg("p"), py::arg("q"), py::arg("a"));

    // Verification.
    m.def("el_residual", [](double g, double x, const QuadSpec& s) { return el_residual(to_gamma(g), x, s); },
          py::arg("gamma"), py::arg("x"), spec, release());
    m.def("duality_gap", [](double g, const QuadSpec& s) { return duality_gap(to_gamma(g), s); }, py::arg("gamma"),
          spec, release());
    m.def("lorentzian_upper", [](double g) { return lorentzian_upper(to_gamma(g)); }, py::arg("gamma"));
    m.def("trial_lower", [](double g, double c) { return trial_lower(to_gamma(g), c); }, py::arg("gamma"),
          py::arg("c") = 3.0);
    m.def("low_gamma_diagnostic", [](double g, const QuadSpec& s) { return low_gamma_diagnostic(to_gamma(g), s); },
          py::arg("gamma"), spec, release());
    m.def(
        "run_verification",
        [](double g, const QuadSpec& s, double el_tol, double gap_tol) {
            return run_verification(to_gamma(g), s, VerifyTolerances{el_tol, gap_tol});
        },
        py::arg("gamma"), spec, py::arg("el_tol") = 1e-6, py::arg("gap_tol") = 1e-5, release());
}
