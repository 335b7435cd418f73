// Acceptance driver: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qboundary/entanglement.hpp"
#include "qboundary/experiments.hpp"
#include "qboundary/linalg.hpp"
#include "qboundary/state_file.hpp"
#include "qboundary/states.hpp"

#ifndef QBOUNDARY_TEST_DATA
#error "QBOUNDARY_TEST_DATA must point at tests/data"
#endif

using namespace qboundary;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail.push_back(what);
        }
    }

    void report(const Report& r) {
        for (const auto& c : r.comparisons)
            if (!c.pass) require(false, r.experiment_id + "." + c.name);
    }

    // Comparison must exist, pass, and carry the stated tolerance or tighter.
    void comparison(const Report& r, const std::string& name, double max_tol) {
        for (const auto& c : r.comparisons)
            if (c.name == name) {
                require(c.pass, r.experiment_id + "." + name + " failed");
                require(c.tolerance <= max_tol, r.experiment_id + "." + name + " tolerance too loose");
                return;
            }
        require(false, r.experiment_id + "." + name + " missing");
    }
};

std::string tag(const std::string& base, double x) {
    std::ostringstream os;
    os << base << "[" << x << "]";
    return os.str();
}

Outcome criterion1() {
    Outcome o;
    const Report pps2 = run_experiment("pps2");
    o.report(pps2);
    o.comparison(pps2, "t_b", 1e-10);
    const Report r = run_experiment("pps-n");
    o.report(r);
    for (int n = 2; n <= 10; ++n) {
        const std::string p = "N" + std::to_string(n) + ".";
        o.comparison(r, p + "t_b", 1e-10);
        o.comparison(r, p + "distance_to_mixed", 1e-10);
    }
    o.comparison(r, "boundary_runtime_under_1s", 0.0);
    return o;
}

Outcome criterion2() {
    Outcome o;
    const Report r = run_experiment("void2");
    o.report(r);
    for (double eps : {0.5, 0.1, 1e-4}) {
        for (int i = 0; i < 4; ++i) o.comparison(r, tag("pt_eigenvalue", eps) + "[" + std::to_string(i) + "]", 1e-10);
        // Oracle spectrum.
        const ComplexMatrix rho = (1.0 - eps) * 0.5 *
                                      (projector(basis_ket({0, 1}, {2, 2})) + projector(basis_ket({1, 0}, {2, 2}))) +
                                  eps * projector(bell_psi_plus());
        const Eigen::VectorXd ev = oracle::eigenvalues_desc(oracle::partial_transpose(rho, 2, 2));
        const double expected[4] = {0.5, 0.5, eps / 2.0, -eps / 2.0};
        for (int i = 0; i < 4; ++i) o.require(std::abs(ev(i) - expected[i]) <= 1e-10, tag("oracle_eigenvalue", eps));
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    const Report two = run_experiment("thermal2");
    o.report(two);
    o.comparison(two, "N2.eta0.333333.zero_condition", 1e-10);
    const Report r = run_experiment("thermal-n");
    o.report(r);
    for (const char* p : {"N2.eta0.333333.", "N5.eta0.5.", "N10.eta0.9."}) {
        o.comparison(r, std::string(p) + "t_b", 1e-10);
        o.comparison(r, std::string(p) + "distance_to_thermal", 1e-10);
    }
    // Oracle: delta from the two diagonals, no library calls.
    for (const auto& [n, eta] : std::vector<std::pair<int, double>>{{2, 1.0 / 3.0}, {5, 0.5}, {10, 0.9}}) {
        const double lambda = std::pow((1.0 - eta) / 2.0, n);
        const double tb = -lambda / (1.0 - lambda);
        double sum = 0.0;
        const std::size_t d = std::size_t{1} << n;
        for (std::size_t i = 0; i < d; ++i) {
            const int ones = __builtin_popcountll(i);
            const double w = std::pow((1.0 + eta) / 2.0, n - ones) * std::pow((1.0 - eta) / 2.0, ones);
            const double b = (1.0 - tb) * w + (i == d - 1 ? tb : 0.0);
            sum += std::abs(b - w);
        }
        o.require(std::abs(0.5 * sum - lambda) <= 1e-12, "oracle delta equals lambda");
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    const Report r = run_experiment("example5");
    o.report(r);
    ComplexMatrix m(4, 4);
    m << 5, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1;
    const Eigen::VectorXd ev = oracle::eigenvalues_desc(m / 8.0);
    o.require(std::abs(ev(0) - 0.75) <= 1e-10 && std::abs(ev(1) - 0.25) <= 1e-10 && std::abs(ev(2)) <= 1e-10 &&
                  std::abs(ev(3)) <= 1e-10,
              "oracle spectrum {3/4, 1/4, 0, 0}");
    const ComplexVector psi_minus = bell_psi_minus();
    const ComplexMatrix pt_phi = oracle::partial_transpose(projector(bell_phi_plus()), 2, 2);
    o.require(std::abs(psi_minus.dot(pt_phi * psi_minus).real() + 0.5) <= 1e-12, "oracle <psi-|PT(phi+)|psi-> = -1/2");
    for (double eps : {0.3, 1e-3}) {
        const ComplexMatrix rho = (1.0 - eps) * m / 8.0 + eps * projector(bell_phi_plus());
        const double val = psi_minus.dot(oracle::partial_transpose(rho, 2, 2) * psi_minus).real();
        o.require(std::abs(val + eps / 2.0) <= 1e-10, tag("oracle <psi-|PT(rho_eps)|psi->", eps));
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    const Report prop = run_experiment("propzero");
    o.report(prop);
    const Report cq = run_experiment("cq");
    o.report(cq);
    for (const char* slot : {"zero_00.", "zero_01.", "zero_1+.", "zero_1-."})
        for (double eps : {0.1, 1e-3}) {
            const std::string p = slot;
            o.comparison(cq, tag(p + "neighbour_npt", eps), 0.0);
            o.comparison(cq, tag(p + "witness_value", eps), 1e-10);
        }
    return o;
}

Outcome criterion6() {
    Outcome o;
    const std::string fixture = std::string(QBOUNDARY_TEST_DATA) + "/appendix_c_pt.json";
    const Report r = run_experiment("qutrit9", {{"fixture", fixture}});
    o.report(r);
    o.comparison(r, "rho0_ppt", 0.0);
    for (double eps : {0.5, 1e-3}) {
        o.comparison(r, tag("npt", eps), 0.0);
        o.comparison(r, tag("witness_value", eps), 1e-12);
    }
    o.comparison(r, "fixture.witness_value", 1e-12);
    // Oracle read of the fixture entries.
    const StateFile f = read_state_file(fixture);
    const double eps = f.metadata.value("eps", 0.0);
    o.require(std::abs(f.matrix(4, 4)) <= 1e-15, "fixture <11|PT|11> = 0");
    o.require(std::abs(std::abs(f.matrix(4, 0)) - eps / 2.0) <= 1e-12, "fixture <11|PT|00> = eps/2");
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (const char* id : {"fundlemma", "prop-real"}) {
        const Report r = run_experiment(id, {{"count", "200"}});
        o.report(r);
        o.comparison(r, "distill_witness_negative", 0.0);
        o.comparison(r, "npt", 0.0);
        o.require(r.values["checks"] == 200 * 6, std::string(id) + " ran 1200 checks");
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    const Report r = run_experiment("gb-ball", {{"count", "100"}});
    o.report(r);
    o.comparison(r, "ppt_inside_ball", 0.0);
    o.comparison(r, "phi_plus_outside", 0.0);
    o.require(!r.notes.empty(), "report states that PPT is the checked consequence");
    return o;
}

Outcome criterion9() {
    Outcome o;
    const Report id = run_experiment("discord-identity", {{"count", "200"}});
    o.report(id);
    for (double t : {0.1, 0.5, 0.9}) o.comparison(id, tag("status_preserved", t), 0.0);
    const Report eps = run_experiment("eps-discord");
    o.report(eps);
    o.comparison(eps, "discordant", 0.0);
    o.comparison(eps, "rho_hat_npt_with_witness", 0.0);
    o.comparison(eps, "eps0_classical", 0.0);
    return o;
}

Outcome criterion10() {
    Outcome o;
    oracle::Rng rng(2024);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::Index d = 1 + trial % 16;
        const ComplexMatrix h = rng.hermitian(d);
        const SpectralDecomposition s = hermitian_eig(h);
        worst = std::max(worst, (s.reconstruct() - h).norm() / std::max(1.0, h.norm()));
        o.require((s.eigenvalues - oracle::eigenvalues_desc(h)).cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, h.norm()),
                  "eigenvalues agree with the independent solver");
    }
    for (Eigen::Index d : {64, 128}) {
        const ComplexMatrix h = rng.hermitian(d);
        const SpectralDecomposition s = hermitian_eig(h);
        worst = std::max(worst, (s.reconstruct() - h).norm() / std::max(1.0, h.norm()));
    }
    o.require(worst <= 1e-9, "reconstruction error above 1e-9");
    double spread = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index da = 2 + trial % 2;
        const Eigen::Index db = 2 + (trial / 2) % 2;
        const Dims dims{static_cast<std::size_t>(da), static_cast<std::size_t>(db)};
        const ComplexMatrix rho = rng.density(da * db);
        const ComplexMatrix u = oracle::kron(rng.unitary(da), ComplexMatrix::Identity(db, db));
        const RealVector a = hermitian_eigenvalues(partial_transpose(rho, dims));
        const RealVector b = hermitian_eigenvalues(partial_transpose(ComplexMatrix(u * rho * u.adjoint()), dims));
        spread = std::max(spread, (a - b).cwiseAbs().maxCoeff());
    }
    o.require(spread <= 1e-9, "PT spectrum changed under an A-basis change");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"pps2/pps-n: t_b = -1/(2^N - 1), distance 1/2^N for N = 2..10, boundary search < 1 s", criterion1},
        {"void2: PT eigenvalues {1/2, 1/2, eps/2, -eps/2} for eps in {0.5, 0.1, 1e-4}", criterion2},
        {"thermal2/thermal-n: t_b = -lambda/(1 - lambda), (1 - eta)^2 (p + 1) = 4p, exact distance", criterion3},
        {"example5: spectrum {3/4, 1/4, 0, 0}, psi- witness values, Discordant", criterion4},
        {"propzero/cq: every zero slot yields NPT with witness eps/2", criterion5},
        {"qutrit9: rho0 PPT, rho_eps witness (|11>, |00>, eps/2), fixture agrees", criterion6},
        {"fundlemma/prop-real: 200 void states x 6 eps are NPT and distillable within eps", criterion7},
        {"gb-ball: 100 states in the ball are PPT, phi+ outside", criterion8},
        {"discord-identity/eps-discord: status preserved, eps-discordant NPT, eps = 0 classical", criterion9},
        {"numerical substrate: eigen reconstruction and PT basis independence", criterion10},
    };
    bool all = true;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail.push_back(std::string("exception: ") + e.what());
        }
        all = all && out.pass;
        std::cout << "criterion " << (i + 1) << ": " << (out.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << "\n";
        for (const auto& d : out.detail) std::cout << "    " << d << "\n";
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (all ? "all criteria PASS" : "some criteria FAIL") << " (" << ms << " ms)\n";
    return all ? 0 : 1;
}
