#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qboundary/discord.hpp"
#include "qboundary/sampling.hpp"

using namespace qboundary;
using Catch::Approx;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::ParseError;
}

// Dephasing oracle: sum_i (|a_i><a_i| (x) I) rho (|a_i><a_i| (x) I).
ComplexMatrix dephase_oracle(const ComplexMatrix& rho, const ComplexMatrix& basis, Eigen::Index db) {
    ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (Eigen::Index i = 0; i < basis.cols(); ++i) {
        const ComplexMatrix p = oracle::kron(basis.col(i) * basis.col(i).adjoint(), ComplexMatrix::Identity(db, db));
        out += p * rho * p;
    }
    return out;
}

ClassicalForm cq_normal_form() {
    ClassicalForm form;
    form.mu.resize(2, 2);
    form.mu << 0.1, 0.2, 0.4, 0.3;
    form.basis_a = ComplexMatrix::Identity(2, 2);
    form.unitaries_b = {ComplexMatrix::Identity(2, 2), hadamard()};
    return form;
}

}  // namespace

TEST_CASE("dephasing matches the projector oracle", "[discord][property]") {
    Sampler rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t da = 2 + static_cast<std::size_t>(trial) % 2;
        const std::size_t db = 2 + static_cast<std::size_t>(trial / 2) % 2;
        const DensityMatrix rho = rng.density({da, db});
        const ComplexMatrix basis = rng.haar_unitary(da);
        const DensityMatrix d = dephase(rho, basis);
        CHECK((d.matrix() - dephase_oracle(rho.matrix(), basis, static_cast<Eigen::Index>(db))).norm() <= 1e-13);
        // Idempotent, trace preserving.
        CHECK((dephase(d, basis).matrix() - d.matrix()).norm() <= 1e-13);
        CHECK(d.op().trace() == Approx(1.0));
    }
    CHECK(code_of([] { dephase(maximally_mixed({2, 2}), 2.0 * ComplexMatrix::Identity(2, 2)); }) ==
          ErrorCode::NotOrthonormal);
    CHECK(code_of([] { dephase(maximally_mixed({2, 2}), ComplexMatrix::Identity(3, 3)); }) == ErrorCode::DimMismatch);
}

TEST_CASE("classify named states", "[discord][closed-form]") {
    CHECK(classify(example5_state()).status == Classicality::Discordant);
    CHECK(classify(cq_state({0.4, 0.3, 0.2, 0.1})).status == Classicality::ClassicalWrtA);
    // Swapping the parties of a cq state gives a discordant state when the
    // new marginal is nondegenerate.
    CHECK(classify(swap_subsystems(cq_state({0.4, 0.3, 0.2, 0.1}))).status == Classicality::Discordant);

    const ClassicalityVerdict mixed = classify(maximally_mixed({2, 2}));
    CHECK(mixed.status == Classicality::Indeterminate);
    CHECK_FALSE(mixed.reason.empty());
    // A candidate basis rescues degenerate marginals.
    CHECK(classify(maximally_mixed({2, 2}), kHermitianTol, ComplexMatrix(hadamard())).status ==
          Classicality::ClassicalWrtA);
    // Bell state: degenerate marginal and no basis fixes it.
    CHECK(classify(pure_state(bell_phi_plus(), {2, 2}), kHermitianTol, ComplexMatrix::Identity(2, 2)).status ==
          Classicality::Indeterminate);
}

TEST_CASE("classical forms classify as classical", "[discord][property]") {
    Sampler rng(52);
    const std::vector<Dims> shapes{{2, 2}, {2, 3}, {3, 3}, {2, 4}};
    for (int trial = 0; trial < 60; ++trial) {
        const Dims dims = shapes[static_cast<std::size_t>(trial) % 4];
        const ClassicalForm form = rng.classical_form(dims, 1e-3);
        const DensityMatrix rho = realize_classical(form);
        const ClassicalityVerdict v = classify(rho);
        CHECK(v.status == Classicality::ClassicalWrtA);
        CHECK(is_classical_wrt_basis(rho, form.basis_a).classical);
    }
}

TEST_CASE("depolarizing preserves classicality status", "[discord][property]") {
    Sampler rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const DensityMatrix rho = trial % 2 ? rng.density({2, 3}) : realize_classical(rng.classical_form({2, 3}, 1e-3));
        const Classicality base = classify(rho).status;
        REQUIRE(base != Classicality::Indeterminate);
        for (double t : {0.1, 0.5, 0.9, 1.0}) CHECK(depolarize_classify(rho, t).status == base);
    }
    CHECK(code_of([] { depolarize_classify(example5_state(), 0.0); }) == ErrorCode::OutOfRange);
    CHECK(code_of([] { depolarize_classify(example5_state(), 1.2); }) == ErrorCode::OutOfRange);
}

TEST_CASE("eps-discordant construction on the cq normal form", "[discord]") {
    const ClassicalForm form = cq_normal_form();
    const DensityMatrix rho1 = embedded_psi_plus({2, 2});
    for (double eps : {0.5, 1e-2, 1e-4, 1e-6}) {
        const EpsilonDiscordant out = epsilon_discordant(form, rho1, eps);
        CHECK(classify(out.state).status == Classicality::Discordant);
        REQUIRE(out.certificate);
        CHECK(out.certificate->verdict == PtVerdict::NPT);
        CHECK(out.z == Approx(0.6));
        CHECK(out.k == Approx(1.0 / ((1.0 - eps) * 0.6 + eps)));
        CHECK(trace_distance(out.state, realize_classical(form)) <= eps + 1e-15);
        // rho_eps = ((1 - eps) z + eps) rho_hat + (1 - eps)(1 - z) I/d.
        const ComplexMatrix rebuilt =
            ((1.0 - eps) * out.z + eps) * out.rho_hat.matrix() + (1.0 - eps) * (1.0 - out.z) * ComplexMatrix::Identity(4, 4) / 4.0;
        CHECK((rebuilt - out.state.matrix()).norm() <= 1e-12);
    }
    const EpsilonDiscordant zero = epsilon_discordant(form, rho1, 0.0);
    CHECK_FALSE(zero.certificate);
    CHECK(classify(zero.state).status == Classicality::ClassicalWrtA);
}

TEST_CASE("eps-discordant uniform weights", "[discord]") {
    ClassicalForm form;
    form.mu = Eigen::MatrixXd::Constant(2, 2, 0.25);
    form.basis_a = ComplexMatrix::Identity(2, 2);
    form.unitaries_b = {ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)};
    const EpsilonDiscordant out = epsilon_discordant(form, embedded_psi_plus({2, 2}), 0.2);
    CHECK(out.z == 0.0);
    CHECK(out.eps_prime == 1.0);
    CHECK(std::abs(out.rho_v(0, 0) - 1.0) <= 1e-15);
    REQUIRE(out.certificate);
    CHECK(out.certificate->verdict == PtVerdict::NPT);
}

TEST_CASE("eps-discordant precondition errors", "[discord][error]") {
    const DensityMatrix rho1 = embedded_psi_plus({2, 2});
    ClassicalForm form = cq_normal_form();
    ClassicalForm bad = form;
    bad.mu << 0.2, 0.1, 0.4, 0.3;
    CHECK(code_of([&] { epsilon_discordant(bad, rho1, 0.1); }) == ErrorCode::BadOrdering);
    bad = form;
    bad.unitaries_b[0] = hadamard();
    CHECK(code_of([&] { epsilon_discordant(bad, rho1, 0.1); }) == ErrorCode::BadOrdering);
    CHECK(code_of([&] { epsilon_discordant(form, maximally_mixed({2, 2}), 0.1); }) == ErrorCode::BadDirection);
    CHECK(code_of([&] { epsilon_discordant(form, pure_state(bell_phi_plus(), {2, 2}), 0.1); }) ==
          ErrorCode::BadDirection);
    CHECK(code_of([&] { epsilon_discordant(form, rho1, 1.5); }) == ErrorCode::EpsOutOfRange);
    CHECK(code_of([&] { epsilon_discordant(form, maximally_mixed({2, 3}), 0.1); }) == ErrorCode::DimMismatch);
}
