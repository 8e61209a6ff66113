#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracfem/analysis.hpp"
#include "fracfem/error.hpp"
#include "fracfem/experiment.hpp"
#include "fracfem/fraccalc.hpp"
#include "fracfem/special.hpp"

namespace py = pybind11;
using namespace fracfem;

namespace {

Mesh make_mesh(int m, double delta) { return Mesh(m, delta == 1.0 ? Grading::uniform() : Grading::graded(delta)); }

BoundaryCondition parse_bc(const std::string& bc) {
    if (bc == "dirichlet") return BoundaryCondition::dirichlet;
    if (bc == "mixed") return BoundaryCondition::mixed_left_neumann;
    throw ArgumentError("bc must be 'dirichlet' or 'mixed'");
}

}  // namespace

PYBIND11_MODULE(_fracfem, m) {
    m.doc() = "Finite elements for Riemann-Liouville two-point boundary value problems";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
    py::register_exception<UnsupportedFormError>(m, "UnsupportedFormError", base.ptr());
    py::register_exception<UnsupportedSourceError>(m, "UnsupportedSourceError", base.ptr());
    py::register_exception<QuadratureFailure>(m, "QuadratureFailure", base.ptr());
    py::register_exception<DegenerateSplittingError>(m, "DegenerateSplittingError", base.ptr());
    py::register_exception<SingularSystemError>(m, "SingularSystemError", base.ptr());
    py::register_exception<IterativeFailure>(m, "IterativeFailure", base.ptr());

    m.def("gamma", &gamma_fn, py::arg("x"));
    m.def("rl_integral_power", &rl_integral_power, py::arg("order"), py::arg("exponent"), py::arg("x"),
          "(0I^order t^exponent)(x) by the power rule.");

    py::class_<Mesh>(m, "Mesh")
        .def(py::init(&make_mesh), py::arg("m"), py::arg("delta") = 1.0)
        .def_property_readonly("elements", &Mesh::elements)
        .def_property_readonly("nodes", [](const Mesh& mesh) { return mesh.nodes(); })
        .def_property_readonly("is_uniform", &Mesh::is_uniform)
        .def("locate", &Mesh::locate);

    m.def(
        "assemble_lead", [](const Mesh& mesh, double alpha) { return assemble_lead(mesh, FracOrder(alpha)); },
        py::arg("mesh"), py::arg("alpha"), "Leading stiffness matrix on the interior nodes.");

    py::class_<ReconSolution>(m, "ReconSolution")
        .def_readonly("mu_h", &ReconSolution::mu_h)
        .def_property_readonly("coeffs", [](const ReconSolution& s) { return s.u_r_h.coeffs(); })
        .def_property_readonly("nodes", [](const ReconSolution& s) { return s.u_r_h.mesh().nodes(); })
        .def("__call__", &ReconSolution::operator(), py::arg("x"))
        .def("regular", &ReconSolution::regular, py::arg("x"));

    m.def(
        "solve",
        [](double alpha, const std::string& example, bool potential, const std::string& bc, int m, double delta) {
            const ProblemSpec spec = make_problem(alpha, parse_example(example), potential, parse_bc(bc));
            return solve_reconstruction(spec, make_mesh(m, delta));
        },
        py::arg("alpha"), py::arg("example") = "a", py::arg("potential") = false, py::arg("bc") = "dirichlet",
        py::arg("m") = 64, py::arg("delta") = 1.0,
        "Reconstruction solve for a catalog source; returns the regular part and mu_h.");

    m.def(
        "exact_mu",
        [](double alpha, const std::string& example, const std::string& bc) {
            return exact_q0(make_problem(alpha, parse_example(example), false, parse_bc(bc))).mu;
        },
        py::arg("alpha"), py::arg("example") = "a", py::arg("bc") = "dirichlet");

    m.def(
        "run_experiment",
        [](const std::string& config_json) {
            const ExperimentConfig config = config_from_json(config_json);
            std::vector<ReportCell> cells;
            {
                py::gil_scoped_release release;
                cells = run_experiment(config);
            }
            return emit_table(cells, config.format);
        },
        py::arg("config_json"), "Runs a convergence study from a flat JSON configuration and returns the table text.");

    m.attr("CSV_HEADER") = kCsvHeader;
}
