#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qboundary/states.hpp"

using namespace qboundary;
using Catch::Approx;

TEST_CASE("named kets and gates", "[states]") {
    CHECK((hadamard() * hadamard() - ComplexMatrix::Identity(2, 2)).norm() <= 1e-15);
    CHECK((pauli_x() * ket0() - ket1()).norm() == 0.0);
    CHECK((hadamard() * ket0() - ket_plus()).norm() <= 1e-15);
    CHECK(std::abs(ket_plus().dot(ket_minus())) <= 1e-15);
    CHECK(basis_ket({1, 2}, {2, 3})(5) == Complex(1.0, 0.0));
    CHECK((superposition(3, 0, 2, -1) - (ComplexVector::Unit(3, 0) - ComplexVector::Unit(3, 2)) / std::sqrt(2.0))
              .norm() <= 1e-15);
}

TEST_CASE("Bell states are orthonormal and maximally entangled", "[states]") {
    const std::array<ComplexVector, 4> bell{bell_phi_plus(), bell_phi_minus(), bell_psi_plus(), bell_psi_minus()};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(bell[i].dot(bell[j]) - (i == j ? 1.0 : 0.0)) <= 1e-15);
    const DensityMatrix rho = pure_state(bell_phi_plus(), {2, 2});
    const ComplexMatrix marginal = partial_trace(rho.matrix(), rho.dims(), Subsystem::A);
    CHECK((marginal - 0.5 * ComplexMatrix::Identity(2, 2)).norm() <= 1e-15);
}

TEST_CASE("Werner family", "[states]") {
    CHECK((werner(0.0).matrix() - pure_state(bell_psi_minus(), {2, 2}).matrix()).norm() <= 1e-15);
    CHECK((werner(0.75).matrix() - maximally_mixed({2, 2}).matrix()).norm() <= 1e-15);
    CHECK_THROWS_AS(werner(1.5), Error);
}

TEST_CASE("pseudo-pure and thermal states", "[states]") {
    const DensityMatrix target = pure_state(basis_ket({1, 1}, {2, 2}), {2, 2});
    const HermitianOperator pps = pseudo_pure(-1.0 / 3.0, target);
    CHECK(pps.trace() == Approx(1.0));
    CHECK(std::abs(pps(3, 3)) <= 1e-15);

    const DensityMatrix th = thermal_n(1.0 / 3.0, 2);
    const RealVector spec = thermal_spectrum(1.0 / 3.0, 2);
    CHECK(th.dims() == Dims{2, 2});
    CHECK(th(0, 0).real() == Approx(4.0 / 9.0));
    CHECK(th(3, 3).real() == Approx(1.0 / 9.0));
    CHECK((th.matrix().diagonal().real() - spec).norm() <= 1e-15);
    CHECK(spec.sum() == Approx(1.0));
    CHECK(thermal_spectrum(0.9, 20).size() == (1 << 20));
    CHECK_THROWS_AS(thermal_n(1.5, 2), Error);
}

TEST_CASE("nine product states are orthonormal; the mixture annihilates |11>", "[states][closed-form]") {
    const auto states = nine_qutrit_states();
    REQUIRE(states.size() == 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j)
            CHECK(std::abs(states[i].dot(states[j]) - (i == j ? 1.0 : 0.0)) <= 1e-14);
    const DensityMatrix rho0 = nine_state_mixture();
    CHECK(rho0.op().trace() == Approx(1.0));
    CHECK(std::abs(rho0(4, 4)) <= 1e-15);
    CHECK(std::abs(rho0(1, 3)) <= 1e-15);
    CHECK((rho0.matrix() * basis_ket({1, 1}, {3, 3})).norm() <= 1e-15);
}

TEST_CASE("example-5 and cq states", "[states][closed-form]") {
    const DensityMatrix e5 = example5_state();
    ComplexMatrix expected(4, 4);
    expected << 5, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1;
    CHECK((e5.matrix() - expected / 8.0).norm() <= 1e-15);

    const auto basis = cq_basis();
    const DensityMatrix cq = cq_state({0.4, 0.3, 0.2, 0.1});
    const std::array<double, 4> w{0.4, 0.3, 0.2, 0.1};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK((cq.matrix() * basis[i] - w[i] * basis[i]).norm() <= 1e-15);
        for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(basis[i].dot(basis[j]) - (i == j ? 1.0 : 0.0)) <= 1e-15);
    }
    CHECK_THROWS_AS(cq_state({0.5, 0.5, 0.5, -0.5}), Error);
}

TEST_CASE("embedded psi+", "[states]") {
    const DensityMatrix p = embedded_psi_plus({3, 4});
    CHECK(p.dims() == Dims{3, 4});
    CHECK(p(1, 4).real() == Approx(0.5));
    CHECK(p(4, 1).real() == Approx(0.5));
    CHECK(std::abs(p(0, 0)) == 0.0);
    CHECK_THROWS_AS(embedded_psi_plus({1, 4}), Error);
}

TEST_CASE("partial trace matches the oracle", "[states][property]") {
    oracle::Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t da = 2 + trial % 3;
        const std::size_t db = 2 + (trial / 3) % 3;
        const ComplexMatrix m = rng.density(static_cast<Eigen::Index>(da * db));
        const ComplexMatrix ra = partial_trace(m, {da, db}, Subsystem::A);
        CHECK((ra - oracle::trace_out_b(m, static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db))).norm() <=
              1e-13);
        // Tr_A through the swap.
        const DensityMatrix rho(m, {da, db});
        const ComplexMatrix rb = partial_trace(m, {da, db}, Subsystem::B);
        const ComplexMatrix rb_swap = partial_trace(swap_subsystems(rho).matrix(), {db, da}, Subsystem::A);
        CHECK((rb - rb_swap).norm() <= 1e-13);
        CHECK(swap_subsystems(swap_subsystems(rho)).matrix() == rho.matrix());
    }
}

TEST_CASE("classical forms realize and round trip", "[states]") {
    ClassicalForm form;
    form.mu.resize(2, 2);
    form.mu << 0.4, 0.3, 0.2, 0.1;
    form.basis_a = ComplexMatrix::Identity(2, 2);
    form.unitaries_b = {ComplexMatrix::Identity(2, 2), hadamard()};
    const DensityMatrix rho = realize_classical(form);
    CHECK((rho.matrix() - cq_state({0.4, 0.3, 0.2, 0.1}).matrix()).norm() <= 1e-15);

    const ClassicalForm back = classical_form_from_state(rho);
    CHECK((realize_classical(back).matrix() - rho.matrix()).norm() <= 1e-12);

    ClassicalForm bad = form;
    bad.mu(0, 0) = -0.1;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = form;
    bad.unitaries_b.pop_back();
    CHECK_THROWS_AS(realize_classical(bad), Error);
    CHECK_THROWS_AS(classical_form_from_state(example5_state()), Error);
}
