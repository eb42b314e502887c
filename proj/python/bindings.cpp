#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bfr/bf_core.hpp"
#include "bfr/cauchy_bf.hpp"
#include "bfr/cli.hpp"
#include "bfr/errors.hpp"
#include "bfr/flip.hpp"
#include "bfr/numerics.hpp"
#include "bfr/report.hpp"

namespace py = pybind11;
using namespace bfr;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bayes factors, flip points and reversal pairs for the normal point-null model";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NoSignChange>(m, "NoSignChange", base.ptr());
    py::register_exception<MaxIterExceeded>(m, "MaxIterExceeded", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<NoFlipPoint>(m, "NoFlipPoint", base.ptr());
    py::register_exception<NotAReversal>(m, "NotAReversal", base.ptr());

    py::class_<numerics::SolverConfig>(m, "SolverConfig")
        .def(py::init([](double rel_tol, double abs_tol, int max_iter) {
                 numerics::SolverConfig c{rel_tol, abs_tol, max_iter};
                 c.validate();
                 return c;
             }),
             py::arg("rel_tol") = 1e-12, py::arg("abs_tol") = 1e-14, py::arg("max_iter") = 200)
        .def_readwrite("rel_tol", &numerics::SolverConfig::rel_tol)
        .def_readwrite("abs_tol", &numerics::SolverConfig::abs_tol)
        .def_readwrite("max_iter", &numerics::SolverConfig::max_iter);

    py::enum_<Direction>(m, "Direction")
        .value("FavoursH1", Direction::FavoursH1)
        .value("Neutral", Direction::Neutral)
        .value("FavoursH0", Direction::FavoursH0);

    py::enum_<FlipMethod>(m, "FlipMethod")
        .value("Bracketed", FlipMethod::Bracketed)
        .value("LambertW", FlipMethod::LambertW);

    py::class_<TestSetup>(m, "TestSetup")
        .def(py::init<int, double, double>(), py::arg("n"), py::arg("z"), py::arg("sigma") = 1.0)
        .def_static("from_mean", &TestSetup::from_mean, py::arg("n"), py::arg("mean"))
        .def_property_readonly("n", &TestSetup::n)
        .def_property_readonly("z", &TestSetup::z)
        .def_property_readonly("sigma", &TestSetup::sigma)
        .def_property_readonly("mean", &TestSetup::mean)
        .def("__repr__", [](const TestSetup& s) {
            std::ostringstream o;
            o << "TestSetup(n=" << s.n() << ", z=" << s.z() << ")";
            return o.str();
        });

    py::class_<NormalPrior>(m, "NormalPrior")
        .def(py::init<double>(), py::arg("tau"))
        .def_readonly("tau", &NormalPrior::tau)
        .def("k", &NormalPrior::k, py::arg("setup"));

    py::class_<CauchyPrior>(m, "CauchyPrior")
        .def(py::init<double>(), py::arg("r"))
        .def_readonly("r", &CauchyPrior::r);

    py::class_<BayesFactorResult>(m, "BayesFactorResult")
        .def_readonly("bf01", &BayesFactorResult::bf01)
        .def_readonly("log_bf01", &BayesFactorResult::log_bf01)
        .def_readonly("direction", &BayesFactorResult::direction)
        .def("__repr__", [](const BayesFactorResult& r) {
            std::ostringstream o;
            o << "BayesFactorResult(bf01=" << r.bf01 << ", direction=" << to_string(r.direction) << ")";
            return o.str();
        });

    py::class_<FlipPointResult>(m, "FlipPointResult")
        .def_readonly("k_star", &FlipPointResult::k_star)
        .def_readonly("residual", &FlipPointResult::residual)
        .def_readonly("method", &FlipPointResult::method)
        .def_readonly("z", &FlipPointResult::z);

    py::class_<ReversalPair>(m, "ReversalPair")
        .def_readonly("tau1", &ReversalPair::tau1)
        .def_readonly("tau2", &ReversalPair::tau2)
        .def_readonly("tau_star", &ReversalPair::tau_star)
        .def_readonly("bf1", &ReversalPair::bf1)
        .def_readonly("bf2", &ReversalPair::bf2);

    py::class_<report::TableOneRow>(m, "TableOneRow")
        .def_readonly("z", &report::TableOneRow::z)
        .def_readonly("z_squared", &report::TableOneRow::z_squared)
        .def_readonly("p_value", &report::TableOneRow::p_value)
        .def_readonly("k_star", &report::TableOneRow::k_star)
        .def_readonly("tau_star_n50", &report::TableOneRow::tau_star_n50)
        .def_readonly("tau_star_n100", &report::TableOneRow::tau_star_n100);

    const numerics::SolverConfig defaults{};

    m.def("lambert_w0", &numerics::lambert_w0, py::arg("x"), py::arg("cfg") = defaults);
    m.def("std_normal_pdf", &numerics::std_normal_pdf, py::arg("x"));
    m.def("std_normal_cdf", &numerics::std_normal_cdf, py::arg("x"));

    m.def("log_bf01", &log_bf01, py::arg("z"), py::arg("k"));
    m.def("bf01", &bf01, py::arg("setup"), py::arg("prior"));
    m.def("dlogbf_dk", &dlogbf_dk, py::arg("z"), py::arg("k"));
    m.def("bf_argmin_k", &bf_argmin_k, py::arg("z"));
    m.def("posterior_prob_h0", &posterior_prob_h0, py::arg("bf01"), py::arg("pi0") = 0.5);
    m.def("two_sided_p", &two_sided_p, py::arg("z"));

    m.def("phi", &phi, py::arg("k"));
    m.def("phi_inverse", &phi_inverse, py::arg("y"), py::arg("cfg") = defaults);
    m.def("flip_point", &flip_point, py::arg("z"), py::arg("method") = FlipMethod::Bracketed,
          py::arg("cfg") = defaults);
    m.def("tau_star", &tau_star, py::arg("k_star"), py::arg("n"));
    m.def("reversal_pair", &reversal_pair, py::arg("setup"), py::arg("spread") = 0.5);
    m.def("validate_pair", &validate_pair, py::arg("setup"), py::arg("tau1"), py::arg("tau2"));

    m.def("bf01_cauchy", &bf01_cauchy, py::arg("setup"), py::arg("prior"), py::arg("cfg") = defaults);
    m.def("bf01_normal_via_quadrature", &bf01_normal_via_quadrature, py::arg("setup"), py::arg("prior"),
          py::arg("cfg") = defaults);
    m.def("cauchy_flip_scale", &cauchy_flip_scale, py::arg("setup"), py::arg("cfg") = defaults);

    m.def("table1", &report::table1);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
