#include "qboundary/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "qboundary/discord.hpp"
#include "qboundary/entanglement.hpp"
#include "qboundary/geometry.hpp"
#include "qboundary/sampling.hpp"
#include "qboundary/state_file.hpp"
#include "qboundary/states.hpp"

namespace qboundary {

namespace {

using Clock = std::chrono::steady_clock;

// --- parameters ----------------------------------------------------------------

double parse_number(const std::string& key, const std::string& text) {
    const auto fail = [&] { throw Error(ErrorCode::BadParams, "cannot parse " + key + "=" + text); };
    const auto one = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            fail();
        }
        if (used != s.size() || !std::isfinite(v)) fail();
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return one(text);
    const double den = one(text.substr(slash + 1));
    if (den == 0.0) fail();
    return one(text.substr(0, slash)) / den;
}

class ParamReader {
public:
    ParamReader(const Params& params, std::set<std::string> allowed, Report& report)
        : params_(params), report_(report) {
        for (const auto& [key, value] : params)
            if (!allowed.count(key)) throw Error(ErrorCode::BadParams, "unknown parameter \"" + key + "\"");
    }

    double real(const std::string& key, const std::string& fallback) {
        const double v = parse_number(key, raw(key, fallback));
        report_.params[key] = v;
        return v;
    }

    std::size_t count(const std::string& key, const std::string& fallback) {
        const double v = parse_number(key, raw(key, fallback));
        if (v < 0 || v != std::floor(v)) throw Error(ErrorCode::BadParams, key + " must be a nonnegative integer");
        report_.params[key] = static_cast<std::size_t>(v);
        return static_cast<std::size_t>(v);
    }

    std::vector<double> list(const std::string& key, const std::string& fallback) {
        std::vector<double> out;
        std::stringstream ss(raw(key, fallback));
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(parse_number(key, item));
        if (out.empty()) throw Error(ErrorCode::BadParams, key + " is empty");
        report_.params[key] = out;
        return out;
    }

    std::optional<std::string> text(const std::string& key) {
        const auto it = params_.find(key);
        if (it == params_.end()) return std::nullopt;
        report_.params[key] = it->second;
        return it->second;
    }

    bool has(const std::string& key) const { return params_.count(key) != 0; }

private:
    std::string raw(const std::string& key, const std::string& fallback) const {
        const auto it = params_.find(key);
        return it == params_.end() ? fallback : it->second;
    }

    const Params& params_;
    Report& report_;
};

void require_eps(const std::vector<double>& eps, bool allow_zero = false) {
    for (double e : eps)
        if (!((allow_zero ? e >= 0.0 : e > 0.0) && e <= 1.0))
            throw Error(ErrorCode::BadParams, "eps values must lie in (0, 1]");
}

// --- helpers -------------------------------------------------------------------

std::string tag(const std::string& base, double x) {
    std::ostringstream os;
    os << base << "[" << x << "]";
    return os.str();
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json certificate_json(const EntanglementCertificate& c) {
    Json j = Json::object();
    j["verdict"] = to_string(c.verdict);
    j["min_pt_eigenvalue"] = c.min_pt_eigenvalue;
    j["spectral"] = c.spectral;
    if (c.zero_diag_witness) {
        Json w = Json::object();
        w["row"] = c.zero_diag_witness->row;
        w["col"] = c.zero_diag_witness->col;
        w["value"] = complex_json(c.zero_diag_witness->value);
        j["zero_diagonal_witness"] = w;
    } else {
        j["zero_diagonal_witness"] = nullptr;
    }
    if (c.distill_witness) {
        Json w = Json::object();
        w["theta"] = c.distill_witness->theta;
        w["phi"] = c.distill_witness->phi;
        w["value"] = c.distill_witness->value;
        j["distill_witness"] = w;
    } else {
        j["distill_witness"] = nullptr;
    }
    return j;
}

Json verdict_json(const ClassicalityVerdict& v) {
    Json j = Json::object();
    j["status"] = to_string(v.status);
    j["residual"] = v.residual;
    j["threshold"] = v.threshold;
    if (!v.reason.empty()) j["reason"] = v.reason;
    return j;
}

Json gb_json(const GbClassification& g) {
    Json j = Json::object();
    j["region"] = to_string(g.region);
    j["trace_deviation"] = g.trace_deviation;
    j["frobenius_deviation"] = g.frobenius_deviation;
    j["radius"] = g.radius;
    return j;
}

Json real_vector_json(const RealVector& v) {
    Json j = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i));
    return j;
}

double expectation(const ComplexMatrix& m, const ComplexVector& v) { return v.dot(m * v).real(); }

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double eps) {
    return DensityMatrix((1.0 - eps) * a.matrix() + eps * b.matrix(), a.dims());
}

Dims split_first_qubit(std::size_t n_qubits) { return {2, std::size_t{1} << (n_qubits - 1)}; }

DensityMatrix all_ones_projector(std::size_t n_qubits) {
    const std::size_t d = std::size_t{1} << n_qubits;
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(d - 1)) = 1.0;
    return pure_state(v, split_first_qubit(n_qubits));
}

ProductVector all_ones_product(std::size_t n_qubits) {
    const std::size_t db = std::size_t{1} << (n_qubits - 1);
    ComplexVector b = ComplexVector::Zero(static_cast<Eigen::Index>(db));
    b(static_cast<Eigen::Index>(db - 1)) = 1.0;
    return ProductVector{ket1(), b};
}

// Records the eps-entangled neighbour built in the canonical frame: NPT, a
// zero-diagonal witness <00|PT|11> = eps/2 and delta(tau, rho_b) <= eps.
void record_neighbour(Report& r, const std::string& prefix, const DensityMatrix& rho_b, const ProductVector& zero,
                      double eps, double tol) {
    const EpsilonEntangled out = epsilon_entangled_from_void(rho_b, zero, eps, tol);
    const std::size_t db = rho_b.dims()[1];
    r.check(tag(prefix + "neighbour_npt", eps), out.certificate.verdict == PtVerdict::NPT,
            "Peres criterion on tau_eps = (1 - eps) rho_b + eps psi+");
    const auto& w = out.certificate.zero_diag_witness;
    const bool at_corner = w && w->row == 0 && w->col == db + 1;
    r.check(tag(prefix + "witness_at_00_11", eps), at_corner, "zero diagonal <00|PT|00> with <00|PT|11> != 0");
    r.compare(tag(prefix + "witness_value", eps), w ? std::abs(w->value) : 0.0, eps / 2.0, 1e-10,
              "closed form <00|PT(tau_eps)|11> = eps/2");
    const double delta = trace_distance(out.state, rho_b);
    r.check(tag(prefix + "distance_le_eps", eps), delta <= eps * (1.0 + 1e-12) + 1e-15,
            "delta(tau_eps, rho_b) <= eps");
}

// --- experiments -----------------------------------------------------------------

void pps_case(Report& r, std::size_t n, bool certify, double tol) {
    const std::string p = "N" + std::to_string(n) + ".";
    const double d = std::ldexp(1.0, static_cast<int>(n));
    const DensityMatrix mixed = maximally_mixed(split_first_qubit(n));
    const StateLine line{mixed, all_ones_projector(n)};
    const BoundaryPoint b = find_boundary(line);
    r.compare(p + "t_b", b.t_b, -1.0 / (d - 1.0), 1e-10, "closed form t_b = -1/(2^N - 1)");
    r.compare(p + "distance_to_mixed", trace_distance(mixed, b.state), 1.0 / d, 1e-10,
              "closed form delta(I/2^N, rho_b) = 1/2^N");
    r.compare(p + "void_degree", static_cast<double>(b.void_degree), 1.0, 0.0, "rho_b is a 1-void state");
    r.values[p + "t_b"] = b.t_b;
    if (certify) record_neighbour(r, p, b.state, all_ones_product(n), 1e-3, tol);
}

constexpr const char* kThermalNote =
    "delta(rho_thermal, rho_b) equals lambda exactly; the expansion (lambda + lambda/(1 - lambda))/2 counts the "
    "|1^N> eigenvalue change as 1 - lambda instead of 1 - 2 lambda and is kept only as an upper bound.";

void thermal_case(Report& r, std::size_t n, double eta, bool certify, double tol) {
    std::ostringstream os;
    os << "N" << n << ".eta" << eta << ".";
    const std::string p = os.str();
    const DensityMatrix thermal = thermal_n(eta, n).regrouped(split_first_qubit(n));
    const StateLine line{thermal, all_ones_projector(n)};
    const BoundaryPoint b = find_boundary(line);
    const double lambda = std::pow((1.0 - eta) / 2.0, static_cast<double>(n));
    r.compare(p + "t_b", b.t_b, -lambda / (1.0 - lambda), 1e-10, "closed form t_b = -lambda/(1 - lambda)");
    // rho_b - rho = t_b (|1^N><1^N| - rho) and Tr|rho - |1^N><1^N|| = 2(1 - lambda),
    // so delta = |t_b| (1 - lambda) = lambda exactly.
    const double delta = trace_distance(thermal, b.state);
    const double series = 0.5 * (lambda + lambda / (1.0 - lambda));
    r.compare(p + "distance_to_thermal", delta, lambda, 1e-10, "exact delta = |t_b| (1 - lambda) = lambda");
    r.check(p + "distance_within_series_radius", delta <= series,
            "the radius (lambda + lambda/(1 - lambda))/2 bounds delta from above");
    r.values[p + "series_radius"] = series;
    r.values[p + "t_b"] = b.t_b;
    r.values[p + "lambda_1N"] = lambda;
    if (n == 2) {
        const double pp = std::abs(b.t_b);
        r.compare(p + "zero_condition", (1.0 - eta) * (1.0 - eta) * (pp + 1.0) - 4.0 * pp, 0.0, 1e-10,
                  "closed form (1 - eta)^2 (p + 1) = 4p");
    }
    if (certify) record_neighbour(r, p, b.state, all_ones_product(n), 1e-3, tol);
}

void run_pps2(Report& r, ParamReader& p, const RunOptions& o) {
    const double eps = p.real("eps", "1e-3");
    require_eps({eps});
    const DensityMatrix mixed = maximally_mixed({2, 2});
    const StateLine line{mixed, pure_state(basis_ket({1, 1}, {2, 2}), {2, 2})};
    const BoundaryPoint b = find_boundary(line);
    r.compare("t_b", b.t_b, -1.0 / 3.0, 1e-10, "closed form m = t = -1/3");
    const RealVector spectrum = hermitian_eigenvalues(b.state.op());
    for (int i = 0; i < 3; ++i)
        r.compare("eigenvalue[" + std::to_string(i) + "]", spectrum(i), 1.0 / 3.0, 1e-10,
                  "closed form: the other three eigenvalues are 1/3");
    r.compare("eigenvalue[3]", spectrum(3), 0.0, 1e-10, "|11> becomes a zero eigenvector");
    r.compare("distance_to_mixed", trace_distance(mixed, b.state), 0.25, 1e-10, "closed form delta = 1/2^N");
    r.values["spectrum"] = real_vector_json(spectrum);
    record_neighbour(r, "", b.state, ProductVector{ket1(), ket1()}, eps, o.tol);
}

void run_thermal2(Report& r, ParamReader& p, const RunOptions& o) {
    const double eta = p.real("eta", "1/3");
    if (!(eta > 0.0 && eta < 1.0)) throw Error(ErrorCode::BadParams, "eta must lie in (0, 1)");
    thermal_case(r, 2, eta, true, o.tol);
    r.note(kThermalNote);
}

void run_void2(Report& r, ParamReader& p, const RunOptions& o) {
    const auto eps_list = p.list("eps", "0.5,0.1,1e-4");
    require_eps(eps_list);
    const Dims dims{2, 2};
    const DensityMatrix rho(0.5 * (projector(basis_ket({0, 1}, dims)) + projector(basis_ket({1, 0}, dims))), dims);
    const DensityMatrix psi_plus = pure_state(bell_psi_plus(), dims);
    r.compare("void_degree", static_cast<double>(void_degree(rho.op())), 2.0, 0.0, "rho is a 2-void state");
    for (double eps : eps_list) {
        const DensityMatrix rho_eps = mix(rho, psi_plus, eps);
        const HermitianOperator pt = partial_transpose(rho_eps.op());
        const RealVector spectrum = hermitian_eigenvalues(pt);
        const double expected[4] = {0.5, 0.5, eps / 2.0, -eps / 2.0};
        for (int i = 0; i < 4; ++i)
            r.compare(tag("pt_eigenvalue", eps) + "[" + std::to_string(i) + "]", spectrum(i), expected[i], 1e-10,
                      "closed form eigenvalues 1/2, 1/2, eps/2, -eps/2");
        const EntanglementCertificate cert = peres_check(rho_eps, o.tol);
        r.check(tag("npt", eps), cert.verdict == PtVerdict::NPT, "Peres criterion");
        const auto& w = cert.zero_diag_witness;
        r.check(tag("witness_at_00_11", eps), w && w->row == 0 && w->col == 3,
                "smallest zero-diagonal witness of PT(rho_eps)");
        r.compare(tag("witness_value", eps), w ? std::abs(w->value) : 0.0, eps / 2.0, 1e-10,
                  "closed form <00|PT|11> = eps/2");
        r.compare(tag("entry_11_00", eps), std::abs(pt(3, 0)), eps / 2.0, 1e-10,
                  "closed form <11|PT|00> = eps/2 with <11|PT|11> = 0");
        r.check(tag("distance_le_eps", eps), trace_distance(rho, rho_eps) <= eps * (1.0 + 1e-12),
                "delta(rho, rho_eps) <= eps");
        r.values[tag("pt_spectrum", eps)] = real_vector_json(spectrum);
    }
}

void run_propzero(Report& r, ParamReader& p, const RunOptions& o) {
    const auto eps_list = p.list("eps", "0.1,1e-3");
    require_eps(eps_list);
    Sampler rng(o.seed);
    const Dims dims{2, 2};
    const DensityMatrix psi_plus = pure_state(bell_psi_plus(), dims);

    // Direct construction with |11> as zero eigenvector, no frame change.
    const DensityMatrix rho(ComplexMatrix(Eigen::Vector4d(0.5, 0.3, 0.2, 0.0).cast<Complex>().asDiagonal()), dims);
    for (double eps : eps_list) {
        const EntanglementCertificate cert = peres_check(mix(rho, psi_plus, eps), o.tol);
        r.check(tag("direct.npt", eps), cert.verdict == PtVerdict::NPT, "Peres criterion with the zero-diagonal lemma");
        const auto& w = cert.zero_diag_witness;
        r.check(tag("direct.witness_at_11_00", eps), w && w->row == 3 && w->col == 0,
                "<11|PT|11> = 0 and <11|PT|00> != 0");
        r.compare(tag("direct.witness_value", eps), w ? std::abs(w->value) : 0.0, eps / 2.0, 1e-10,
                  "closed form <11|PT(rho_eps)|00> = eps/2");
    }

    // Every slot of the computational basis, then a random product basis.
    for (std::size_t slot = 0; slot < 4; ++slot) {
        RealVector lambdas(4);
        for (Eigen::Index i = 0; i < 4; ++i) lambdas(i) = rng.uniform(0.1, 1.0);
        lambdas(static_cast<Eigen::Index>(slot)) = 0.0;
        lambdas /= lambdas.sum();
        const DensityMatrix state(ComplexMatrix(lambdas.cast<Complex>().asDiagonal()), dims);
        const ProductVector zero{ComplexMatrix::Identity(2, 2).col(static_cast<Eigen::Index>(slot / 2)),
                                 ComplexMatrix::Identity(2, 2).col(static_cast<Eigen::Index>(slot % 2))};
        for (double eps : eps_list)
            record_neighbour(r, "slot" + std::to_string(slot) + ".", state, zero, eps, o.tol);
    }
    const ComplexMatrix ua = rng.haar_unitary(2);
    const ComplexMatrix ub = rng.haar_unitary(2);
    const std::size_t slot = rng.index(4);
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        if (k == slot) continue;
        m += rng.uniform(0.1, 1.0) * projector(tensor(ComplexVector(ua.col(static_cast<Eigen::Index>(k / 2))),
                                                      ComplexVector(ub.col(static_cast<Eigen::Index>(k % 2)))));
    }
    m /= m.trace().real();
    const DensityMatrix rotated(m, dims);
    const ProductVector zero{ua.col(static_cast<Eigen::Index>(slot / 2)), ub.col(static_cast<Eigen::Index>(slot % 2))};
    for (double eps : eps_list) record_neighbour(r, "random_basis.", rotated, zero, eps, o.tol);
    r.values["random_basis_zero_slot"] = slot;
}

void run_example5(Report& r, ParamReader& p, const RunOptions& o) {
    const auto eps_list = p.list("eps", "0.3,1e-3");
    require_eps(eps_list);
    const Dims dims{2, 2};
    const DensityMatrix rho = example5_state();
    const SpectralDecomposition spec = hermitian_eig(rho.op());
    const double expected[4] = {0.75, 0.25, 0.0, 0.0};
    for (int i = 0; i < 4; ++i)
        r.compare("eigenvalue[" + std::to_string(i) + "]", spec.eigenvalues(i), expected[i], 1e-10,
                  "closed form spectrum 3/4, 1/4, 0, 0");
    const ComplexVector pp = tensor(ket_plus(), ket_plus());
    const ComplexVector e00 = basis_ket({0, 0}, dims);
    const ComplexVector psi0 = (e00 + pp) / std::sqrt(3.0);
    const ComplexVector psi1 = e00 - pp;
    r.compare("overlap_psi0", std::abs(psi0.dot(spec.eigenvectors.col(0))), 1.0, 1e-10,
              "closed form eigenvector (|00> + |++>)/sqrt(3)");
    r.compare("overlap_psi1", std::abs(psi1.dot(spec.eigenvectors.col(1))), 1.0, 1e-10,
              "closed form eigenvector |00> - |++>");
    r.compare("pt_equals_rho", (partial_transpose(rho.matrix(), dims) - rho.matrix()).norm(), 0.0, 1e-12,
              "PT(rho) = rho");

    const DensityMatrix phi_plus = pure_state(bell_phi_plus(), dims);
    const ComplexVector psi_minus = bell_psi_minus();
    r.compare("psi_minus_pt_phi_plus", expectation(partial_transpose(phi_plus.matrix(), dims), psi_minus), -0.5, 1e-12,
              "closed form <psi-|PT(phi+)|psi-> = -1/2");
    r.compare("psi_minus_rho", expectation(rho.matrix(), psi_minus), 0.0, 1e-12, "closed form <psi-|rho|psi-> = 0");
    for (double eps : eps_list) {
        const DensityMatrix rho_eps = mix(rho, phi_plus, eps);
        r.compare(tag("psi_minus_pt_rho_eps", eps), expectation(partial_transpose(rho_eps.matrix(), dims), psi_minus),
                  -eps / 2.0, 1e-10, "closed form <psi-|PT(rho_eps)|psi-> = -eps/2");
        r.check(tag("npt", eps), peres_check(rho_eps, o.tol).verdict == PtVerdict::NPT, "Peres criterion");
    }
    const ClassicalityVerdict v = classify(rho, o.tol);
    r.check("classify_discordant", v.status == Classicality::Discordant, "the state is discordant");
    r.values["spectrum"] = real_vector_json(spec.eigenvalues);
    r.values["classicality"] = verdict_json(v);
}

void run_cq(Report& r, ParamReader& p, const RunOptions& o) {
    const auto weights = p.list("weights", "0.4,0.3,0.2,0.1");
    const auto eps_list = p.list("eps", "0.1,1e-3");
    require_eps(eps_list);
    if (weights.size() != 4) throw Error(ErrorCode::BadParams, "weights needs four entries");
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw Error(ErrorCode::BadParams, "weights must be positive");
        total += w;
    }
    std::array<double, 4> lambdas{};
    for (std::size_t i = 0; i < 4; ++i) lambdas[i] = weights[i] / total;

    const DensityMatrix rho = cq_state(lambdas);
    const ClassicalityVerdict v = classify(rho, o.tol);
    const ClassicalityVerdict swapped = classify(swap_subsystems(rho), o.tol);
    const bool distinct_marginal = std::abs((lambdas[0] + lambdas[1]) - (lambdas[2] + lambdas[3])) > kDegeneracyGap;
    r.check("classical_wrt_A", v.status == Classicality::ClassicalWrtA, "classical with respect to A");
    if (distinct_marginal)
        r.check("swapped_discordant", swapped.status == Classicality::Discordant,
                "discordant after exchanging A and B");
    else
        r.note("A-marginal is degenerate for these weights; the swapped verdict is not decisive");
    r.values["classicality"] = verdict_json(v);
    r.values["swapped_classicality"] = verdict_json(swapped);

    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix x = pauli_x();
    const ComplexMatrix h = hadamard();
    const std::array<ComplexMatrix, 4> maps{tensor(id, id), tensor(id, x), tensor(x, h), tensor(x, ComplexMatrix(x * h))};
    const std::array<ProductVector, 4> zeros{ProductVector{ket0(), ket0()}, ProductVector{ket0(), ket1()},
                                             ProductVector{ket1(), ket_plus()}, ProductVector{ket1(), ket_minus()}};
    const char* names[4] = {"00", "01", "1+", "1-"};
    const auto basis = cq_basis();
    for (std::size_t k = 0; k < 4; ++k) {
        const std::string pre = std::string("zero_") + names[k] + ".";
        std::array<double, 4> w = lambdas;
        w[k] = 0.0;
        const double s = w[0] + w[1] + w[2] + w[3];
        for (double& x_ : w) x_ /= s;
        const DensityMatrix state = cq_state(w);
        const CanonicalFrame frame = canonical_frame(state, zeros[k], o.tol);
        r.compare(pre + "frame_matches_local_map", (frame.local_unitary() - maps[k]).norm(), 0.0, 1e-12,
                  "local maps I(x)I, I(x)X, X(x)H, X(x)XH");
        bool permutes = true;
        for (const auto& v_ : basis) {
            const ComplexVector image = maps[k] * v_;
            double best = 0.0;
            for (const auto& u : basis) best = std::max(best, std::abs(u.dot(image)));
            permutes = permutes && std::abs(best - 1.0) < 1e-12;
        }
        r.check(pre + "map_permutes_basis", permutes, "the local map sends the basis onto itself");
        for (double eps : eps_list) record_neighbour(r, pre, state, zeros[k], eps, o.tol);
    }
}

void run_qutrit9(Report& r, ParamReader& p, const RunOptions& o) {
    const auto eps_list = p.list("eps", "0.5,1e-3");
    require_eps(eps_list);
    const auto fixture = p.text("fixture");
    const Dims dims{3, 3};
    const DensityMatrix rho0 = nine_state_mixture();
    const EntanglementCertificate base = peres_check(rho0, o.tol);
    r.check("rho0_ppt", base.verdict == PtVerdict::PPT, "rho0 is separable, hence PPT");
    r.compare("rho0_void_degree", static_cast<double>(void_degree(rho0.op())), 1.0, 0.0, "|11> spans the kernel");
    r.compare("rho0_11_11", std::abs(rho0(4, 4)), 0.0, 1e-15, "<11|rho0|11> = 0");
    r.compare("rho0_01_10", std::abs(rho0(1, 3)), 0.0, 1e-15, "<01|rho0|10> = 0");
    const ClassicalityVerdict v = classify(rho0, o.tol);
    r.values["rho0_classicality"] = verdict_json(v);
    r.values["rho0_min_pt_eigenvalue"] = base.min_pt_eigenvalue;

    const DensityMatrix psi_plus = embedded_psi_plus(dims);
    for (double eps : eps_list) {
        const DensityMatrix rho_eps = mix(rho0, psi_plus, eps);
        const EntanglementCertificate cert = peres_check(rho_eps, o.tol);
        r.check(tag("npt", eps), cert.verdict == PtVerdict::NPT, "Peres criterion");
        const auto& w = cert.zero_diag_witness;
        r.check(tag("witness_at_11_00", eps), w && w->row == 4 && w->col == 0, "<11|PT|11> = 0, <11|PT|00> != 0");
        r.compare(tag("witness_value", eps), w ? std::abs(w->value) : 0.0, eps / 2.0, 1e-12,
                  "closed form <11|PT(rho_eps)|00> = eps/2");
    }
    if (fixture) {
        const StateFile file = read_state_file(*fixture);
        const HermitianOperator pt(file.matrix, file.dims);
        const double eps = file.metadata.value("eps", 0.0);
        const auto w = zero_diagonal_witness(pt, o.tol);
        r.check("fixture.witness_at_11_00", w && w->row == 4 && w->col == 0, "block-transposed fixture matrix");
        r.compare("fixture.witness_value", w ? std::abs(w->value) : 0.0, eps / 2.0, 1e-12,
                  "fixture entry <11|PT|00> = eps/2");
        r.compare("fixture.matches_partial_transpose",
                  (partial_transpose(mix(rho0, psi_plus, eps).matrix(), dims) - pt.matrix()).norm(), 0.0, 1e-12,
                  "independently generated PT(rho_eps)");
    }
}

std::vector<Dims> dims_cycle() { return {{2, 2}, {2, 3}, {3, 3}, {2, 4}}; }

void run_gb_ball(Report& r, ParamReader& p, const RunOptions& o) {
    const std::size_t count = p.count("count", "100");
    Sampler rng(o.seed);
    const std::vector<Dims> shapes{{2, 2}, {2, 3}, {3, 3}};
    std::size_t ppt = 0;
    std::size_t inside = 0;
    std::size_t norm_order = 0;
    double worst_min_pt = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
        const Dims& dims = shapes[i % shapes.size()];
        const DensityMatrix rho = rng.near_maximally_mixed(dims, rng.uniform(0.05, 0.95));
        const GbClassification g = gurvits_barnum(rho);
        const EntanglementCertificate c = peres_check(rho, o.tol);
        if (c.verdict == PtVerdict::PPT) ++ppt;
        if (g.region == GbRegion::InsideTraceBall) ++inside;
        if (g.frobenius_deviation <= g.trace_deviation * (1.0 + 1e-12)) ++norm_order;
        worst_min_pt = std::min(worst_min_pt, c.min_pt_eigenvalue);
    }
    r.compare("inside_trace_ball", static_cast<double>(inside), static_cast<double>(count), 0.0,
              "samples satisfy Tr|rho - I/d| < 1/d");
    r.compare("ppt_inside_ball", static_cast<double>(ppt), static_cast<double>(count), 0.0,
              "states in the ball are separable, hence PPT");
    r.compare("frobenius_le_trace_norm", static_cast<double>(norm_order), static_cast<double>(count), 0.0,
              "||X||_2 <= Tr|X|");
    r.values["worst_min_pt_eigenvalue"] = worst_min_pt;

    const GbClassification bell = gurvits_barnum(pure_state(bell_phi_plus(), {2, 2}));
    r.check("phi_plus_outside", bell.region == GbRegion::Outside, "a Bell state lies outside the separable ball");
    const DensityMatrix mixed = maximally_mixed({2, 2});
    r.check("mixed_inside", gurvits_barnum(mixed).region == GbRegion::InsideTraceBall, "I/d is the centre of the ball");
    r.values["phi_plus"] = gb_json(bell);
    r.note("Separability inside the ball rests on the Gurvits-Barnum bound; PPT is the necessary consequence checked here.");
}

// Random state with <00|rho1|00> = 0 and |<10|rho1|01>| >= 0.01.
DensityMatrix lemma_direction(Sampler& rng, const Dims& dims) {
    const std::size_t d = total_dim(dims);
    const std::size_t db = dims[1];
    for (;;) {
        ComplexMatrix g = rng.ginibre(d, d);
        g.row(0).setZero();
        ComplexMatrix m = g * g.adjoint();
        m /= m.trace().real();
        if (std::abs(m(static_cast<Eigen::Index>(db), 1)) >= 0.01) return DensityMatrix(m, dims);
    }
}

void run_fundlemma(Report& r, ParamReader& p, const RunOptions& o) {
    const std::size_t count = p.count("count", "200");
    const auto eps_list = p.list("eps", "1e-1,1e-2,1e-3,1e-4,1e-5,1e-6");
    require_eps(eps_list);
    Sampler rng(o.seed);
    std::size_t total = 0;
    std::size_t npt = 0;
    std::size_t witnessed = 0;
    std::size_t consistent = 0;
    std::size_t optimal = 0;
    std::size_t orthogonal = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const Dims dims = dims_cycle()[i % 4];
        const VoidSample sample = rng.separable_void(dims);
        const DensityMatrix rho0 = canonical_frame(sample.rho, sample.zero, o.tol).rotated;
        const DensityMatrix rho1 = lemma_direction(rng, dims);
        for (double eps : eps_list) {
            ++total;
            const DensityMatrix rho_eps = mix(rho0, rho1, eps);
            const EntanglementCertificate cert = peres_check(rho_eps, o.tol);
            if (cert.verdict == PtVerdict::NPT) ++npt;
            if (!cert.distill_witness || !(cert.distill_witness->value < 0.0)) continue;
            ++witnessed;
            const DistillWitness& w = *cert.distill_witness;
            const ComplexMatrix pt = partial_transpose(rho_eps.matrix(), dims);
            const double direct = expectation(pt, w.psi);
            if (std::abs(direct - w.value) <= 1e-12 * std::max(1.0, std::abs(w.value)) + 1e-15) ++consistent;
            if (std::abs(w.e1.dot(w.e2)) < 1e-15 && std::abs(w.f1.dot(w.f2)) < 1e-15) ++orthogonal;
            // The closed form must not be beaten by any theta on a grid.
            bool beaten = false;
            for (int k = 0; k <= 256; ++k) {
                const double theta = M_PI * k / 256.0;
                const ComplexVector psi =
                    tensor(ComplexVector(std::sin(theta) * ComplexVector::Unit(static_cast<Eigen::Index>(dims[0]), 1)),
                             w.f1) +
                      tensor(ComplexVector(-std::polar(1.0, w.phi) * std::cos(theta) *
                                           ComplexVector::Unit(static_cast<Eigen::Index>(dims[0]), 0)),
                             w.f2);
                if (expectation(pt, psi) < w.value - 1e-12 * std::abs(w.value) - 1e-15) beaten = true;
            }
            if (!beaten) ++optimal;
        }
    }
    const auto n = static_cast<double>(total);
    r.compare("npt", static_cast<double>(npt), n, 0.0, "entangled for all 0 < eps <= 1");
    r.compare("distill_witness_negative", static_cast<double>(witnessed), n, 0.0,
              "single-copy witness <Psi|PT(rho_eps)|Psi> < 0, so distillable");
    r.compare("witness_value_matches_expectation", static_cast<double>(consistent), n, 0.0,
              "closed-form value equals <Psi|PT|Psi>");
    r.compare("witness_vectors_orthogonal", static_cast<double>(orthogonal), n, 0.0, "e1 _|_ e2 and f1 _|_ f2");
    r.compare("closed_form_is_minimum", static_cast<double>(optimal), n, 0.0, "no grid theta gives a lower value");
    r.values["instances"] = count;
    r.values["checks"] = total;
}

void run_prop_real(Report& r, ParamReader& p, const RunOptions& o) {
    const std::size_t count = p.count("count", "200");
    const auto eps_list = p.list("eps", "1e-1,1e-2,1e-3,1e-4,1e-5,1e-6");
    require_eps(eps_list);
    Sampler rng(o.seed);
    std::size_t total = 0;
    std::size_t npt = 0;
    std::size_t witnessed = 0;
    std::size_t close = 0;
    std::size_t ppt_base = 0;
    std::size_t spectral = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const Dims dims = dims_cycle()[i % 4];
        const VoidSample sample = rng.separable_void(dims);
        if (peres_check(sample.rho, o.tol).verdict == PtVerdict::PPT) ++ppt_base;
        for (double eps : eps_list) {
            ++total;
            const EpsilonEntangled out = epsilon_entangled_from_void(sample.rho, sample.zero, eps, o.tol);
            if (out.certificate.verdict == PtVerdict::NPT) ++npt;
            if (out.certificate.spectral) ++spectral;
            if (out.certificate.distill_witness && out.certificate.distill_witness->value < 0.0) ++witnessed;
            if (trace_distance(out.state, sample.rho) <= eps * (1.0 + 1e-9) + 1e-15) ++close;
        }
    }
    const auto n = static_cast<double>(total);
    r.compare("void_states_ppt", static_cast<double>(ppt_base), static_cast<double>(count), 0.0,
              "sampled void states are separable, hence PPT");
    r.compare("npt", static_cast<double>(npt), n, 0.0, "entangled states arbitrarily close to rho");
    r.compare("distill_witness_negative", static_cast<double>(witnessed), n, 0.0, "and they are distillable");
    r.compare("distance_le_eps", static_cast<double>(close), n, 0.0, "delta(tau_eps, rho_b) <= eps");
    r.values["instances"] = count;
    r.values["checks"] = total;
    r.values["spectral_npt"] = spectral;
    r.note("NPT verdicts not cleared by the spectral threshold rest on the structural witnesses.");
}

DensityMatrix depolarize(const DensityMatrix& rho, double t) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    return DensityMatrix((1.0 - t) * ComplexMatrix::Identity(d, d) / static_cast<double>(d) + t * rho.matrix(),
                         rho.dims());
}

double marginal_gap(const DensityMatrix& rho) {
    const RealVector v = hermitian_eigenvalues(partial_trace(rho.matrix(), rho.dims(), Subsystem::A));
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i + 1 < v.size(); ++i) gap = std::min(gap, v(i) - v(i + 1));
    return gap;
}

void run_discord_identity(Report& r, ParamReader& p, const RunOptions& o) {
    const std::size_t count = p.count("count", "200");
    const auto ts = p.list("t", "0.1,0.5,0.9");
    for (double t : ts)
        if (!(t > 0.0 && t <= 1.0)) throw Error(ErrorCode::BadParams, "t values must lie in (0, 1]");
    Sampler rng(o.seed);
    std::size_t decisive = 0;
    std::size_t classical = 0;
    std::vector<std::size_t> agree(ts.size(), 0);
    for (std::size_t i = 0; i < count; ++i) {
        const Dims dims = dims_cycle()[i % 4];
        DensityMatrix rho;
        if (i % 2 == 0) {
            rho = realize_classical(rng.classical_form(dims, 1e-3));
        } else {
            do rho = rng.density(dims);
            while (marginal_gap(rho) < 1e-3);
        }
        const ClassicalityVerdict base = classify(rho, o.tol);
        if (base.status != Classicality::Indeterminate) ++decisive;
        if (base.status == Classicality::ClassicalWrtA) ++classical;
        for (std::size_t k = 0; k < ts.size(); ++k)
            if (depolarize_classify(rho, ts[k], o.tol).status == base.status) ++agree[k];
    }
    const auto n = static_cast<double>(count);
    r.compare("decisive", static_cast<double>(decisive), n, 0.0, "nondegenerate marginals give a complete decision");
    r.compare("classical_forms_classical", static_cast<double>(classical), static_cast<double>((count + 1) / 2), 0.0,
              "realized classical forms are classical with respect to A");
    for (std::size_t k = 0; k < ts.size(); ++k)
        r.compare(tag("status_preserved", ts[k]), static_cast<double>(agree[k]), n, 0.0,
                  "(1 - t) I/d + t rho is discordant iff rho is");

    const DensityMatrix e5 = example5_state();
    r.check("example5_t0.5_discordant", depolarize_classify(e5, 0.5, o.tol).status == Classicality::Discordant,
            "depolarized discordant state stays discordant");
    const DensityMatrix near = depolarize(e5, 0.01);
    r.check("example5_t0.01_discordant", classify(near, o.tol).status == Classicality::Discordant,
            "discordant states arbitrarily close to I/d");
    r.check("example5_t0.01_inside_ball", gurvits_barnum(near).region == GbRegion::InsideTraceBall,
            "so they are not boundary separable");
    const DensityMatrix cq = cq_state({0.4, 0.3, 0.2, 0.1});
    r.check("cq_t0.9_classical", depolarize_classify(cq, 0.9, o.tol).status == Classicality::ClassicalWrtA,
            "depolarized classical state stays classical");

    // Mixtures of states classical in a shared basis stay classical in it.
    std::size_t closed = 0;
    const std::size_t mixtures = 20;
    for (std::size_t i = 0; i < mixtures; ++i) {
        const Dims dims = dims_cycle()[i % 4];
        ClassicalForm f1 = rng.classical_form(dims, 0.0);
        ClassicalForm f2 = rng.classical_form(dims, 0.0);
        f2.basis_a = f1.basis_a;
        const DensityMatrix m = mix(realize_classical(f1), realize_classical(f2), rng.uniform());
        if ((dephase(m, f1.basis_a).matrix() - m.matrix()).norm() <= 1e-12) ++closed;
    }
    r.compare("mixture_closure", static_cast<double>(closed), static_cast<double>(mixtures), 0.0,
              "C_A in a fixed basis is convex");
}

void run_eps_discord(Report& r, ParamReader& p, const RunOptions& o) {
    const std::size_t count = p.count("count", "50");
    const auto eps_list = p.list("eps", "0.5,1e-1,1e-2,1e-3,1e-4,1e-6");
    require_eps(eps_list);
    Sampler rng(o.seed);

    // I/d: rho_v = |00><00| and rho_hat = rho1.
    {
        ClassicalForm uniform;
        uniform.mu = Eigen::MatrixXd::Constant(2, 2, 0.25);
        uniform.basis_a = ComplexMatrix::Identity(2, 2);
        uniform.unitaries_b = {ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)};
        const EpsilonDiscordant out = epsilon_discordant(uniform, embedded_psi_plus({2, 2}), 0.2, o.tol);
        r.compare("uniform.rho_v_is_00", (out.rho_v.matrix() - projector(basis_ket({0, 0}, {2, 2}))).norm(), 0.0,
                  1e-15, "rho_v = |00><00| when rho = I/d");
        r.check("uniform.rho_hat_npt", out.certificate && out.certificate->verdict == PtVerdict::NPT,
                "rho_hat is entangled");
    }

    // cq_state relabeled by X (x) XH so that the 0.1 branch sits at |00>.
    {
        ClassicalForm form;
        form.mu.resize(2, 2);
        form.mu << 0.1, 0.2, 0.4, 0.3;
        form.basis_a = ComplexMatrix::Identity(2, 2);
        form.unitaries_b = {ComplexMatrix::Identity(2, 2), hadamard()};
        const ComplexMatrix map = tensor(pauli_x(), ComplexMatrix(pauli_x() * hadamard()));
        const DensityMatrix cq = cq_state({0.4, 0.3, 0.2, 0.1});
        r.compare("cq.form_matches_relabeled_state",
                  (realize_classical(form).matrix() - map * cq.matrix() * map.adjoint()).norm(), 0.0, 1e-12,
                  "(X (x) XH) cq (X (x) XH)^dag");
        const EpsilonDiscordant out = epsilon_discordant(form, embedded_psi_plus({2, 2}), 0.1, o.tol);
        r.check("cq.discordant", classify(out.state, o.tol).status == Classicality::Discordant,
                "rho_eps is discordant");
        r.check("cq.rho_hat_npt", out.certificate && out.certificate->verdict == PtVerdict::NPT,
                "rho_hat is entangled");
    }

    std::size_t total = 0;
    std::size_t discordant = 0;
    std::size_t npt = 0;
    std::size_t zero_classical = 0;
    std::size_t decomposed = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const Dims dims = dims_cycle()[i % 4];
        const ClassicalForm form = rng.normal_classical_form(dims, 0.02);
        const ComplexMatrix frame = tensor(form.basis_a, ComplexMatrix(ComplexMatrix::Identity(
                                                             static_cast<Eigen::Index>(dims[1]),
                                                             static_cast<Eigen::Index>(dims[1]))));
        const DensityMatrix rho1(frame * embedded_psi_plus(dims).matrix() * frame.adjoint(), dims);
        const EpsilonDiscordant zero = epsilon_discordant(form, rho1, 0.0, o.tol);
        if (classify(zero.state, o.tol).status == Classicality::ClassicalWrtA) ++zero_classical;
        // rho = z rho_v + (1 - z) I/d in the form's frame.
        const auto d = static_cast<Eigen::Index>(zero.state.dim());
        const ComplexMatrix rebuilt =
            frame * (zero.z * zero.rho_v.matrix() +
                     (1.0 - zero.z) * ComplexMatrix::Identity(d, d) / static_cast<double>(d)) *
            frame.adjoint();
        if ((rebuilt - zero.state.matrix()).norm() <= 1e-12) ++decomposed;
        for (double eps : eps_list) {
            ++total;
            const EpsilonDiscordant out = epsilon_discordant(form, rho1, eps, o.tol);
            if (classify(out.state, o.tol).status == Classicality::Discordant) ++discordant;
            if (out.certificate && out.certificate->verdict == PtVerdict::NPT && out.certificate->distill_witness)
                ++npt;
        }
    }
    const auto n = static_cast<double>(total);
    r.compare("discordant", static_cast<double>(discordant), n, 0.0, "rho_eps is discordant for all 0 < eps <= 1");
    r.compare("rho_hat_npt_with_witness", static_cast<double>(npt), n, 0.0,
              "normalized rho_hat is entangled and distillable");
    r.compare("eps0_classical", static_cast<double>(zero_classical), static_cast<double>(count), 0.0,
              "eps = 0 returns the classical state");
    r.compare("void_decomposition", static_cast<double>(decomposed), static_cast<double>(count), 0.0,
              "rho = z rho_v + (1 - z) I/d");
    r.values["forms"] = count;
    r.values["checks"] = total;
}

void run_pps_n(Report& r, ParamReader& p, const RunOptions& o) {
    const auto ns = p.list("N", "2,3,4,5,6,7,8,9,10");
    const std::size_t certify_max = p.count("certify_max_n", "6");
    for (double n : ns)
        if (n < 2 || n > 10 || n != std::floor(n)) throw Error(ErrorCode::BadParams, "N must be an integer in 2..10");
    const auto start = Clock::now();
    for (double n : ns) pps_case(r, static_cast<std::size_t>(n), false, o.tol);
    const auto boundary_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    r.check("boundary_runtime_under_1s", boundary_ms < 1000, "diagonal fast path");
    r.values["boundary_runtime_ms"] = boundary_ms;
    for (double n : ns)
        if (static_cast<std::size_t>(n) <= certify_max)
            record_neighbour(r, "N" + std::to_string(static_cast<std::size_t>(n)) + ".",
                             find_boundary({maximally_mixed(split_first_qubit(static_cast<std::size_t>(n))),
                                            all_ones_projector(static_cast<std::size_t>(n))})
                                 .state,
                             all_ones_product(static_cast<std::size_t>(n)), 1e-3, o.tol);
    r.note("eps-entangled neighbours are certified with the dense solver up to N = certify_max_n.");
}

void run_thermal_n(Report& r, ParamReader& p, const RunOptions& o) {
    std::vector<std::pair<std::size_t, double>> cases{{2, 1.0 / 3.0}, {5, 0.5}, {10, 0.9}};
    if (p.has("N") || p.has("eta")) {
        const double n = p.real("N", "2");
        const double eta = p.real("eta", "1/3");
        if (n < 1 || n > 11 || n != std::floor(n)) throw Error(ErrorCode::BadParams, "N must be an integer in 1..11");
        if (!(eta > 0.0 && eta < 1.0)) throw Error(ErrorCode::BadParams, "eta must lie in (0, 1)");
        cases = {{static_cast<std::size_t>(n), eta}};
    }
    const std::size_t certify_max = p.count("certify_max_n", "6");
    for (const auto& [n, eta] : cases) thermal_case(r, n, eta, n >= 2 && n <= certify_max, o.tol);
    r.note(kThermalNote);
}

using Runner = std::function<void(Report&, ParamReader&, const RunOptions&)>;

struct Entry {
    ExperimentInfo info;
    std::set<std::string> keys;
    Runner run;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table{
        {{"pps2", "two-qubit extrapolated pseudo-pure state: t_b = -1/3 and an eps-entangled neighbour",
          {{"eps", "1e-3"}}, 2000},
         {"eps"}, run_pps2},
        {{"thermal2", "two-qubit thermal state: (1 - eta)^2 (p + 1) = 4p at the boundary", {{"eta", "1/3"}}, 2000},
         {"eta"}, run_thermal2},
        {{"void2", "2-void state: PT spectrum 1/2, 1/2, eps/2, -eps/2", {{"eps", "0.5,0.1,1e-4"}}, 2000},
         {"eps"}, run_void2},
        {{"propzero", "zero eigenvalue on a product eigenbasis gives eps-entangled neighbours", {{"eps", "0.1,1e-3"}},
          2000},
         {"eps"}, run_propzero},
        {{"example5", "separable discordant state with an entangled eigenbasis", {{"eps", "0.3,1e-3"}}, 2000},
         {"eps"}, run_example5},
        {{"cq", "classical-quantum state: every zero weight gives eps-entangled neighbours",
          {{"weights", "0.4,0.3,0.2,0.1"}, {"eps", "0.1,1e-3"}}, 2000},
         {"weights", "eps"}, run_cq},
        {{"qutrit9", "mixture of eight locally indistinguishable product states is boundary separable",
          {{"eps", "0.5,1e-3"}, {"fixture", "(none)"}}, 2000},
         {"eps", "fixture"}, run_qutrit9},
        {{"gb-ball", "states in the ball Tr|rho - I/d| < 1/d are PPT", {{"count", "100"}}, 10000},
         {"count"}, run_gb_ball},
        {{"fundlemma", "zero <00|rho|00> plus nonzero <10|rho1|01> gives distillable entanglement",
          {{"count", "200"}, {"eps", "1e-1,...,1e-6"}}, 30000},
         {"count", "eps"}, run_fundlemma},
        {{"prop-real", "separable void states with a product zero eigenvector are boundary separable",
          {{"count", "200"}, {"eps", "1e-1,...,1e-6"}}, 30000},
         {"count", "eps"}, run_prop_real},
        {{"discord-identity", "(1 - t) I/d + t rho is discordant iff rho is",
          {{"count", "200"}, {"t", "0.1,0.5,0.9"}}, 30000},
         {"count", "t"}, run_discord_identity},
        {{"eps-discord", "classical states have eps-discordant neighbours",
          {{"count", "50"}, {"eps", "0.5,1e-1,...,1e-6"}}, 30000},
         {"count", "eps"}, run_eps_discord},
        {{"pps-n", "N-qubit extrapolated pseudo-pure states: t_b = -1/(2^N - 1), distance 1/2^N",
          {{"N", "2,...,10"}, {"certify_max_n", "6"}}, 5000},
         {"N", "certify_max_n"}, run_pps_n},
        {{"thermal-n", "N-qubit thermal states: t_b = -lambda/(1 - lambda)",
          {{"N", "2,5,10 with eta 1/3,1/2,0.9"}, {"eta", ""}, {"certify_max_n", "6"}}, 5000},
         {"N", "eta", "certify_max_n"}, run_thermal_n},
    };
    return table;
}

std::int64_t elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

}  // namespace

const std::vector<ExperimentInfo>& catalogue() {
    static const std::vector<ExperimentInfo> infos = [] {
        std::vector<ExperimentInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

Report run_experiment(const std::string& id, const Params& params, const RunOptions& options) {
    const auto& table = entries();
    const auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.info.id == id; });
    if (it == table.end()) throw Error(ErrorCode::UnknownExperiment, "no experiment named \"" + id + "\"");
    Report r;
    r.experiment_id = id;
    ParamReader reader(params, it->keys, r);
    r.params["seed"] = options.seed;
    r.params["tol"] = options.tol;
    const auto start = Clock::now();
    it->run(r, reader, options);
    r.runtime_ms = elapsed_ms(start);
    r.compare("runtime_ms_within_budget", static_cast<double>(r.runtime_ms), 0.0,
              static_cast<double>(it->info.budget_ms), "stated runtime budget");
    r.values["budget_ms"] = it->info.budget_ms;
    return r;
}

Report certify_state(const DensityMatrix& rho, const RunOptions& options) {
    const auto start = Clock::now();
    Report r;
    r.experiment_id = "certify";
    r.params["tol"] = options.tol;
    r.values["dims"] = rho.dims();
    const RealVector spectrum = hermitian_eigenvalues(rho.op());
    r.values["trace"] = rho.op().trace();
    r.values["min_eigenvalue"] = spectrum(spectrum.size() - 1);
    r.values["void_degree"] = void_degree(rho.op(), options.tol);
    r.check("trace_one", std::abs(rho.op().trace() - 1.0) <= options.tol * std::max(1.0, rho.op().frobenius_norm()),
            "density matrices have unit trace");

    if (rho.dims().size() == 2) {
        const EntanglementCertificate cert = peres_check(rho, options.tol);
        const ClassicalityVerdict v = classify(rho, options.tol);
        const GbClassification g = gurvits_barnum(rho);
        r.values["peres"] = certificate_json(cert);
        r.values["classicality"] = verdict_json(v);
        r.values["gurvits_barnum"] = gb_json(g);
        r.check("ball_implies_ppt", g.region == GbRegion::Outside || cert.verdict == PtVerdict::PPT,
                "states inside the separable ball are PPT");
        r.check("classical_implies_ppt", v.status != Classicality::ClassicalWrtA || cert.verdict == PtVerdict::PPT,
                "states classical with respect to A are separable");
        if (v.status == Classicality::Indeterminate) r.note(v.reason);
    } else {
        r.note("not a bipartite split; entanglement and classicality checks skipped");
    }
    r.runtime_ms = elapsed_ms(start);
    return r;
}

Report certify_operator(const HermitianOperator& op, const RunOptions& options) {
    const auto start = Clock::now();
    const RealVector spectrum = hermitian_eigenvalues(op);
    const double scale = std::max(1.0, op.frobenius_norm());
    const double lam_min = spectrum(spectrum.size() - 1);
    const bool psd = lam_min >= -options.tol * scale;
    const bool unit_trace = std::abs(op.trace() - 1.0) <= options.tol * scale;

    Report r = psd && unit_trace ? certify_state(DensityMatrix(op, options.tol), options) : Report{};
    r.experiment_id = "certify";
    r.params["tol"] = options.tol;
    r.params["raw"] = true;
    r.values["dims"] = op.dims();
    r.values["trace"] = op.trace();
    r.values["min_eigenvalue"] = lam_min;
    r.values["psd"] = psd;
    const auto w = zero_diagonal_witness(op, options.tol);
    if (w) {
        Json j = Json::object();
        j["row"] = w->row;
        j["col"] = w->col;
        j["value"] = complex_json(w->value);
        r.values["zero_diagonal_witness"] = j;
        r.check("witness_implies_negative_eigenvalue", lam_min < 0.0, "zero diagonal with nonzero row is not PSD");
    } else {
        r.values["zero_diagonal_witness"] = nullptr;
    }
    r.runtime_ms = elapsed_ms(start);
    return r;
}

Report boundary_report(const DensityMatrix& rho0, const DensityMatrix& rho1, const RunOptions& options) {
    const auto start = Clock::now();
    Report r;
    r.experiment_id = "boundary";
    r.params["tol"] = options.tol;
    const StateLine line{rho0, rho1};
    const BoundaryPoint b = find_boundary(line);
    r.values["t_b"] = b.t_b;
    r.values["void_degree"] = b.void_degree;
    r.values["min_eigenvalue"] = b.min_eigenvalue;
    r.values["distance_to_rho0"] = trace_distance(rho0, b.state);
    r.check("boundary_state_psd", b.min_eigenvalue >= -line_psd_slack(line, b.t_b), "rho_{t_b} is a state");
    const double beyond = b.t_b - 1e-9 * std::max(1.0, std::abs(b.t_b));
    r.check("beyond_boundary_not_psd", line_min_eigenvalue(line, beyond) < -line_psd_slack(line, beyond),
            "rho_t leaves the state space past t_b");
    r.check("void_state", b.void_degree >= 1, "the boundary state has a zero eigenvalue");
    r.runtime_ms = elapsed_ms(start);
    return r;
}

Report discord_report(const DensityMatrix& rho, const std::optional<ComplexMatrix>& basis, const RunOptions& options) {
    const auto start = Clock::now();
    Report r;
    r.experiment_id = "discord";
    r.params["tol"] = options.tol;
    r.params["basis_supplied"] = basis.has_value();
    const ClassicalityVerdict v = classify(rho, options.tol, basis);
    r.values["classicality"] = verdict_json(v);
    r.values["marginal_spectrum"] =
        real_vector_json(hermitian_eigenvalues(partial_trace(rho.matrix(), rho.dims(), Subsystem::A)));
    if (basis) {
        const BasisTest t = is_classical_wrt_basis(rho, *basis, options.tol);
        r.values["supplied_basis_residual"] = t.residual;
        r.values["supplied_basis_classical"] = t.classical;
    }
    if (v.status == Classicality::ClassicalWrtA)
        r.check("residual_within_tol", v.residual <= v.threshold, "D(rho) = rho in the tested basis");
    if (v.status == Classicality::Discordant)
        r.check("residual_above_threshold", v.residual > v.threshold, "D(rho) != rho in the unique eigenbasis");
    if (v.status == Classicality::Indeterminate) r.note(v.reason);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

}  // namespace qboundary
