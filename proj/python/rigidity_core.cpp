#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rigidity/complex_matrix.hpp"
#include "rigidity/config.hpp"
#include "rigidity/filtration.hpp"
#include "rigidity/leg_embedding.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/matrix_io.hpp"
#include "rigidity/models.hpp"
#include "rigidity/report.hpp"
#include "rigidity/serialize.hpp"
#include "rigidity/transfer_bethe.hpp"
#include "rigidity/yang_baxter.hpp"

namespace py = pybind11;
using namespace rigidity;

namespace {

RMatrixSpec spec_for(const std::string& token) { return build_r(parse_model(token)); }

ComplexMatrix matrix_for(const std::string& token, Complex u) {
    const RMatrixSpec spec = spec_for(token);
    return spec.kind == RKind::constant ? spec.matrix : spec.at(u);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Yang-Baxter defect measurements, interaction-depth filtrations, and "
              "Bethe solvability witnesses on dense complex matrices";

    py::class_<ComplexMatrix>(m, "ComplexMatrix")
        .def(py::init<std::size_t>(), py::arg("dim"))
        .def_static("identity", &ComplexMatrix::identity, py::arg("dim"))
        .def_static("from_entries", &ComplexMatrix::from_entries, py::arg("dim"), py::arg("entries"))
        .def_property_readonly("dim", &ComplexMatrix::dim)
        .def_property_readonly("entries", [](const ComplexMatrix& self) { return self.entries(); })
        .def("__getitem__",
             [](const ComplexMatrix& self, std::pair<std::size_t, std::size_t> ij) {
                 if (ij.first >= self.dim() || ij.second >= self.dim()) throw py::index_error();
                 return self(ij.first, ij.second);
             })
        .def("adjoint", &ComplexMatrix::adjoint)
        .def("trace", &ComplexMatrix::trace)
        .def("__add__", [](const ComplexMatrix& a, const ComplexMatrix& b) { return a + b; })
        .def("__sub__", [](const ComplexMatrix& a, const ComplexMatrix& b) { return a - b; })
        .def("__matmul__", [](const ComplexMatrix& a, const ComplexMatrix& b) { return a * b; })
        .def("__mul__", [](const ComplexMatrix& a, Complex c) { return c * a; })
        .def("__rmul__", [](const ComplexMatrix& a, Complex c) { return c * a; })
        .def("__repr__", [](const ComplexMatrix& self) {
            return "<ComplexMatrix dim=" + std::to_string(self.dim()) + ">";
        });

    m.def("kron", &kron, py::arg("a"), py::arg("b"));
    m.def("frobenius_norm", &frobenius_norm, py::arg("a"));
    m.def("span_rank", &span_rank, py::arg("mats"), py::arg("tol_rank") = Tolerances{}.tol_rank);
    m.def("hermitian_eigenvalues", &hermitian_eigenvalues, py::arg("a"),
          py::arg("tol_herm") = Tolerances{}.tol_herm);

    m.def("embed_adjacent", &embed_adjacent, py::arg("r"), py::arg("i"), py::arg("n"), py::arg("d"));
    m.def("swap_operator", &swap_operator, py::arg("i"), py::arg("j"), py::arg("n"), py::arg("d"));
    m.def(
        "embed_pair",
        [](const ComplexMatrix& r, std::size_t i, std::size_t j, std::size_t n, std::size_t d) {
            return embed_pair(r, SitePair{i, j, n, d});
        },
        py::arg("r"), py::arg("i"), py::arg("j"), py::arg("n"), py::arg("d"));

    m.def("matrix_to_json", &matrix_to_json, py::arg("m"));
    m.def("matrix_from_json", &matrix_from_json, py::arg("text"));

    m.def(
        "build_r", [](const std::string& token, Complex u) { return matrix_for(token, u); }, py::arg("model"),
        py::arg("u") = Complex{0.0, 0.0},
        "Constant matrix of a model; spectral models are evaluated at u");
    m.def(
        "build_hamiltonian",
        [](const std::string& token, std::size_t n, bool periodic) {
            return build_hamiltonian(parse_model(token), n, periodic);
        },
        py::arg("model"), py::arg("n"), py::arg("periodic") = true);

    m.def(
        "yb_defect_constant", [](const std::string& token) { return yb_defect_constant(spec_for(token)); },
        py::arg("model"));
    m.def(
        "yb_defect_spectral",
        [](const std::string& token, Complex u, Complex v) { return yb_defect_spectral(spec_for(token), u, v); },
        py::arg("model"), py::arg("u"), py::arg("v"));
    m.def(
        "check_ybe",
        [](const std::string& token, double tolerance, bool pairwise) {
            return to_json(check_boundary_free(spec_for(token), tolerance, pairwise), 2);
        },
        py::arg("model"), py::arg("tolerance") = Tolerances{}.tol_ybe,
        py::arg("pairwise_generation_asserted") = true, "YbeReport as a JSON string");
    m.def(
        "pairwise_generation_rank",
        [](const std::string& token, std::size_t max_word_len) {
            return pairwise_generation_rank(spec_for(token), max_word_len).rank;
        },
        py::arg("model"), py::arg("max_word_len") = 6);

    m.def(
        "filtration_dims",
        [](const std::string& token, std::size_t n, std::size_t max_depth, const std::string& mode) {
            auto spec = spec_for(token);
            if (spec.kind == RKind::spectral) spec = RMatrixSpec::constant(spec.at(Complex{0.5, 0.0}));
            const auto scan = boundary_scan(spec, n, n, max_depth, Tolerances{}.tol_rank,
                                            mode == "commutator" ? FiltrationMode::commutator
                                                                 : FiltrationMode::product);
            return scan.reports.front().dims;
        },
        py::arg("model"), py::arg("n"), py::arg("max_depth") = 10, py::arg("mode") = "product");
    m.def(
        "boundary_scan_json",
        [](const std::string& token, std::size_t n_min, std::size_t n_max, std::size_t max_depth) {
            auto spec = spec_for(token);
            if (spec.kind == RKind::spectral) spec = RMatrixSpec::constant(spec.at(Complex{0.5, 0.0}));
            return to_json(boundary_scan(spec, n_min, n_max, max_depth), 2);
        },
        py::arg("model"), py::arg("n_min") = 2, py::arg("n_max") = 4, py::arg("max_depth") = 10);

    m.def(
        "monodromy",
        [](const std::string& token, Complex u, std::size_t n) {
            return monodromy(rational_extension(parse_model(token)), u, n);
        },
        py::arg("model"), py::arg("u"), py::arg("n"));
    m.def(
        "transfer_matrix",
        [](const std::string& token, Complex u, std::size_t n) {
            return transfer_matrix(rational_extension(parse_model(token)), u, n);
        },
        py::arg("model"), py::arg("u"), py::arg("n"));
    m.def(
        "transfer_commutator_relative",
        [](const std::string& token, Complex u, Complex v, std::size_t n) {
            return transfer_commutator_relative(rational_extension(parse_model(token)), u, v, n);
        },
        py::arg("model"), py::arg("u"), py::arg("v"), py::arg("n"));

    py::class_<BetheSolution>(m, "BetheSolution")
        .def_readonly("n_sites", &BetheSolution::n_sites)
        .def_readonly("n_magnons", &BetheSolution::n_magnons)
        .def_readonly("roots", &BetheSolution::roots)
        .def_readonly("residual", &BetheSolution::residual)
        .def_readonly("energy", &BetheSolution::energy)
        .def_readonly("momentum_phase", &BetheSolution::momentum_phase)
        .def("__repr__", [](const BetheSolution& s) {
            return "<BetheSolution N=" + std::to_string(s.n_sites) + " M=" + std::to_string(s.n_magnons) +
                   " energy=" + std::to_string(s.energy) + ">";
        });

    m.def(
        "bethe_solve",
        [](std::size_t n_sites, std::size_t n_magnons) { return bethe_solve(n_sites, n_magnons); },
        py::arg("n_sites"), py::arg("n_magnons"));
    m.def("bethe_residual", &bethe_residual, py::arg("roots"), py::arg("n_sites"));
    m.def(
        "compare_spectrum_json",
        [](std::size_t n_sites, std::size_t n_magnons, double tol_spec) {
            return to_json(compare_spectrum(n_sites, n_magnons, true, tol_spec), 2);
        },
        py::arg("n_sites"), py::arg("n_magnons"), py::arg("tol_spec") = Tolerances{}.tol_spec);
    m.def(
        "dichotomy_report_json",
        [](const std::vector<std::string>& tokens) {
            std::vector<ModelId> models;
            if (tokens.empty()) {
                models = default_catalog();
            } else {
                for (const auto& t : tokens) models.push_back(parse_model(t));
            }
            return to_json(run_dichotomy_report(models), 2);
        },
        py::arg("models") = std::vector<std::string>{});

    m.def("max_ambient_dim", &max_ambient_dim);
}
