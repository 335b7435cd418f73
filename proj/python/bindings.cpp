#include <optional>
#include <string>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qboundary/discord.hpp"
#include "qboundary/entanglement.hpp"
#include "qboundary/experiments.hpp"
#include "qboundary/geometry.hpp"
#include "qboundary/state_file.hpp"
#include "qboundary/states.hpp"

namespace py = pybind11;
using namespace qboundary;

namespace {

// Reports cross the boundary as JSON text; the Python side parses it so
// floats keep their 17-digit encoding.
std::string report_text(const Report& r) { return dump_json(to_json(r), -1); }

DensityMatrix state(const ComplexMatrix& m, const Dims& dims, double tol) { return DensityMatrix(m, dims, tol); }

py::dict certificate_dict(const EntanglementCertificate& c) {
    py::dict d;
    d["verdict"] = to_string(c.verdict);
    d["min_pt_eigenvalue"] = c.min_pt_eigenvalue;
    d["witness_vector"] = c.witness_vector;
    d["spectral"] = c.spectral;
    if (c.zero_diag_witness)
        d["zero_diagonal_witness"] =
            py::make_tuple(c.zero_diag_witness->row, c.zero_diag_witness->col, c.zero_diag_witness->value);
    else
        d["zero_diagonal_witness"] = py::none();
    if (c.distill_witness) {
        py::dict w;
        w["theta"] = c.distill_witness->theta;
        w["phi"] = c.distill_witness->phi;
        w["value"] = c.distill_witness->value;
        w["psi"] = c.distill_witness->psi;
        d["distill_witness"] = w;
    } else {
        d["distill_witness"] = py::none();
    }
    return d;
}

py::dict verdict_dict(const ClassicalityVerdict& v) {
    py::dict d;
    d["status"] = to_string(v.status);
    d["residual"] = v.residual;
    d["threshold"] = v.threshold;
    d["reason"] = v.reason;
    if (v.basis)
        d["basis"] = *v.basis;
    else
        d["basis"] = py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of qboundary";

    static py::exception<Error> error_type(m, "Error", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::handle(error_type.ptr())(py::str(std::string(to_string(e.code()))), py::str(e.detail()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    m.attr("PSD_TOL") = kPsdTol;
    m.attr("DEFAULT_SEED") = kDefaultSeed;

    // linalg
    m.def(
        "hermitian_eig",
        [](const ComplexMatrix& h, double tol) {
            const SpectralDecomposition s = hermitian_eig(h, tol);
            return py::make_tuple(s.eigenvalues, s.eigenvectors);
        },
        py::arg("h"), py::arg("tol") = kHermitianTol);
    m.def(
        "trace_distance",
        [](const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
            const auto n = static_cast<std::size_t>(a.rows());
            return trace_distance(state(a, {n}, tol), state(b, {n}, tol));
        },
        py::arg("rho"), py::arg("sigma"), py::arg("tol") = kPsdTol);
    m.def("partial_transpose", py::overload_cast<const ComplexMatrix&, const Dims&>(&partial_transpose),
          py::arg("m"), py::arg("dims"));
    m.def(
        "partial_trace",
        [](const ComplexMatrix& rho, const Dims& dims, const std::string& keep) {
            return partial_trace(rho, dims, keep == "B" ? Subsystem::B : Subsystem::A);
        },
        py::arg("rho"), py::arg("dims"), py::arg("keep") = "A");

    // states
    m.def("example5_state", [] { return example5_state().matrix(); });
    m.def("nine_state_mixture", [] { return nine_state_mixture().matrix(); });
    m.def("cq_state", [](const std::array<double, 4>& w) { return cq_state(w).matrix(); }, py::arg("weights"));
    m.def("thermal_state", [](double eta, std::size_t n) { return thermal_n(eta, n).matrix(); }, py::arg("eta"),
          py::arg("n_qubits"));
    m.def("werner", [](double lambda) { return werner(lambda).matrix(); }, py::arg("lam"));
    m.def("bell_phi_plus", &bell_phi_plus);
    m.def("bell_psi_minus", &bell_psi_minus);
    m.def("embedded_psi_plus", [](const Dims& dims) { return embedded_psi_plus(dims).matrix(); }, py::arg("dims"));

    // geometry
    m.def(
        "find_boundary",
        [](const ComplexMatrix& rho0, const ComplexMatrix& rho1, const Dims& dims, double tol) {
            const BoundaryPoint b = find_boundary({state(rho0, dims, tol), state(rho1, dims, tol)});
            py::dict d;
            d["t_b"] = b.t_b;
            d["state"] = b.state.matrix();
            d["void_degree"] = b.void_degree;
            d["min_eigenvalue"] = b.min_eigenvalue;
            return d;
        },
        py::arg("rho0"), py::arg("rho1"), py::arg("dims"), py::arg("tol") = kPsdTol);
    m.def(
        "void_degree",
        [](const ComplexMatrix& h, const Dims& dims) { return void_degree(HermitianOperator(h, dims)); },
        py::arg("h"), py::arg("dims"));

    // entanglement
    m.def(
        "peres_check",
        [](const ComplexMatrix& rho, const Dims& dims, double tol) {
            return certificate_dict(peres_check(state(rho, dims, tol), tol));
        },
        py::arg("rho"), py::arg("dims"), py::arg("tol") = kPsdTol);
    m.def(
        "epsilon_entangled_from_void",
        [](const ComplexMatrix& rho, const ComplexVector& a, const ComplexVector& b, const Dims& dims, double eps,
           double tol) {
            const EpsilonEntangled out = epsilon_entangled_from_void(state(rho, dims, tol), ProductVector{a, b}, eps, tol);
            py::dict d;
            d["state"] = out.state.matrix();
            d["frame_state"] = out.frame_state.matrix();
            d["local_unitary"] = out.frame.local_unitary();
            d["certificate"] = certificate_dict(out.certificate);
            return d;
        },
        py::arg("rho"), py::arg("a"), py::arg("b"), py::arg("dims"), py::arg("eps"), py::arg("tol") = kPsdTol);
    m.def(
        "gurvits_barnum",
        [](const ComplexMatrix& rho, const Dims& dims) {
            const GbClassification g = gurvits_barnum(state(rho, dims, kPsdTol));
            py::dict d;
            d["region"] = to_string(g.region);
            d["trace_deviation"] = g.trace_deviation;
            d["frobenius_deviation"] = g.frobenius_deviation;
            d["radius"] = g.radius;
            return d;
        },
        py::arg("rho"), py::arg("dims"));

    // discord
    m.def(
        "classify",
        [](const ComplexMatrix& rho, const Dims& dims, std::optional<ComplexMatrix> basis, double tol) {
            return verdict_dict(classify(state(rho, dims, kPsdTol), tol, basis));
        },
        py::arg("rho"), py::arg("dims"), py::arg("basis") = py::none(), py::arg("tol") = kHermitianTol);
    m.def(
        "dephase",
        [](const ComplexMatrix& rho, const Dims& dims, const ComplexMatrix& basis) {
            return dephase(state(rho, dims, kPsdTol), basis).matrix();
        },
        py::arg("rho"), py::arg("dims"), py::arg("basis"));
    m.def(
        "depolarize_classify",
        [](const ComplexMatrix& rho, const Dims& dims, double t, double tol) {
            return verdict_dict(depolarize_classify(state(rho, dims, kPsdTol), t, tol));
        },
        py::arg("rho"), py::arg("dims"), py::arg("t"), py::arg("tol") = kHermitianTol);

    // experiments and reports (JSON text)
    m.def("catalogue_ids", [] {
        std::vector<std::string> ids;
        for (const auto& e : catalogue()) ids.push_back(e.id);
        return ids;
    });
    m.def(
        "run_experiment_json",
        [](const std::string& id, const Params& params, double tol, std::uint64_t seed) {
            return report_text(run_experiment(id, params, RunOptions{tol, seed}));
        },
        py::arg("id"), py::arg("params") = Params{}, py::arg("tol") = kPsdTol, py::arg("seed") = kDefaultSeed);
    m.def(
        "certify_json",
        [](const ComplexMatrix& rho, const Dims& dims, double tol) {
            return report_text(certify_state(state(rho, dims, tol), RunOptions{tol, kDefaultSeed}));
        },
        py::arg("rho"), py::arg("dims"), py::arg("tol") = kPsdTol);
    m.def(
        "state_to_json",
        [](const ComplexMatrix& m, const Dims& dims) { return state_to_json(HermitianOperator(m, dims)); },
        py::arg("matrix"), py::arg("dims"));
    m.def(
        "state_from_json",
        [](const std::string& text, bool raw) {
            const StateFile f = parse_state_file(text);
            if (raw) return py::make_tuple(HermitianOperator(f.matrix, f.dims).matrix(), f.dims);
            return py::make_tuple(state_from_json(text).matrix(), f.dims);
        },
        py::arg("text"), py::arg("raw") = false);
}
