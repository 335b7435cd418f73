#include "qboundary/states.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace qboundary {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexVector unit(std::size_t d, std::size_t i) {
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(i)) = 1.0;
    return v;
}

void require_unit_interval(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        std::ostringstream os;
        os << name << " = " << x << " outside [0, 1]";
        throw Error(ErrorCode::OutOfRange, os.str());
    }
}

bool all_qubits(const Dims& dims) {
    for (auto d : dims)
        if (d != 2) return false;
    return true;
}

}  // namespace

void require_bipartite(const Dims& dims) {
    if (dims.size() != 2) {
        std::ostringstream os;
        os << "expected a bipartite split, got " << dims.size() << " subsystems";
        throw Error(ErrorCode::DimMismatch, os.str());
    }
}

ComplexVector ket0() { return unit(2, 0); }
ComplexVector ket1() { return unit(2, 1); }
ComplexVector ket_plus() { return superposition(2, 0, 1, +1); }
ComplexVector ket_minus() { return superposition(2, 0, 1, -1); }

ComplexMatrix pauli_x() {
    ComplexMatrix x(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    return x;
}

ComplexMatrix hadamard() {
    ComplexMatrix h(2, 2);
    h << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    return h;
}

ComplexVector superposition(std::size_t d, std::size_t a, std::size_t b, int sign) {
    if (a >= d || b >= d || a == b) throw Error(ErrorCode::OutOfRange, "superposition labels out of range");
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(a)) = kInvSqrt2;
    v(static_cast<Eigen::Index>(b)) = sign >= 0 ? kInvSqrt2 : -kInvSqrt2;
    return v;
}

ComplexVector basis_ket(const std::vector<std::size_t>& labels, const Dims& dims) {
    if (labels.size() != dims.size()) throw Error(ErrorCode::OutOfRange, "label count differs from subsystem count");
    std::size_t index = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (labels[k] >= dims[k]) {
            std::ostringstream os;
            os << "label " << labels[k] << " out of range for subsystem of dimension " << dims[k];
            throw Error(ErrorCode::OutOfRange, os.str());
        }
        index = index * dims[k] + labels[k];
    }
    return unit(total_dim(dims), index);
}

DensityMatrix pure_state(const ComplexVector& psi, Dims dims) {
    return DensityMatrix(projector(psi.normalized()), std::move(dims));
}

DensityMatrix maximally_mixed(Dims dims) {
    const auto d = static_cast<Eigen::Index>(total_dim(dims));
    return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d), std::move(dims));
}

ComplexVector bell_phi_plus() { return (basis_ket({0, 0}, {2, 2}) + basis_ket({1, 1}, {2, 2})) * kInvSqrt2; }
ComplexVector bell_phi_minus() { return (basis_ket({0, 0}, {2, 2}) - basis_ket({1, 1}, {2, 2})) * kInvSqrt2; }
ComplexVector bell_psi_plus() { return (basis_ket({0, 1}, {2, 2}) + basis_ket({1, 0}, {2, 2})) * kInvSqrt2; }
ComplexVector bell_psi_minus() { return (basis_ket({0, 1}, {2, 2}) - basis_ket({1, 0}, {2, 2})) * kInvSqrt2; }

DensityMatrix werner(double lambda) {
    require_unit_interval(lambda, "lambda");
    const ComplexMatrix m = lambda / 3.0 *
                                (projector(bell_psi_plus()) + projector(bell_phi_plus()) +
                                 projector(bell_phi_minus())) +
                            (1.0 - lambda) * projector(bell_psi_minus());
    return DensityMatrix(m, {2, 2});
}

HermitianOperator pseudo_pure(double t, const DensityMatrix& target) {
    if (!all_qubits(target.dims())) throw Error(ErrorCode::DimMismatch, "pseudo-pure states are defined on qubits");
    const auto d = static_cast<Eigen::Index>(target.dim());
    const ComplexMatrix m =
        (1.0 - t) * ComplexMatrix::Identity(d, d) / static_cast<double>(d) + t * target.matrix();
    return HermitianOperator(m, target.dims());
}

RealVector thermal_spectrum(double eta, std::size_t n_qubits) {
    require_unit_interval(eta, "eta");
    if (n_qubits == 0 || n_qubits > 30) throw Error(ErrorCode::OutOfRange, "thermal spectrum needs 1..30 qubits");
    const double up = (1.0 + eta) / 2.0;
    const double down = (1.0 - eta) / 2.0;
    const std::size_t d = std::size_t{1} << n_qubits;
    RealVector out(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) {
        const auto ones = static_cast<int>(std::popcount(i));
        out(static_cast<Eigen::Index>(i)) = std::pow(up, static_cast<int>(n_qubits) - ones) * std::pow(down, ones);
    }
    return out;
}

DensityMatrix thermal_n(double eta, std::size_t n_qubits) {
    if (n_qubits > 11) throw Error(ErrorCode::OutOfRange, "dense thermal state limited to 11 qubits");
    const RealVector diag = thermal_spectrum(eta, n_qubits);
    return DensityMatrix(ComplexMatrix(diag.cast<Complex>().asDiagonal()), Dims(n_qubits, 2));
}

std::vector<ComplexVector> nine_qutrit_states() {
    const auto k = [](std::size_t i) { return unit(3, i); };
    const auto s = [](std::size_t a, std::size_t b, int sign) { return superposition(3, a, b, sign); };
    return {
        tensor(k(1), k(1)),        tensor(k(0), s(0, 1, +1)), tensor(k(0), s(0, 1, -1)),
        tensor(k(2), s(1, 2, +1)), tensor(k(2), s(1, 2, -1)), tensor(s(1, 2, +1), k(0)),
        tensor(s(1, 2, -1), k(0)), tensor(s(0, 1, +1), k(2)), tensor(s(0, 1, -1), k(2)),
    };
}

DensityMatrix nine_state_mixture() {
    const auto psi = nine_qutrit_states();
    ComplexMatrix m = ComplexMatrix::Zero(9, 9);
    for (std::size_t i = 1; i < psi.size(); ++i) m += projector(psi[i]);
    return DensityMatrix(m / 8.0, {3, 3});
}

DensityMatrix example5_state() {
    const ComplexVector plus_plus = tensor(ket_plus(), ket_plus());
    const ComplexMatrix m = 0.5 * (projector(basis_ket({0, 0}, {2, 2})) + projector(plus_plus));
    return DensityMatrix(m, {2, 2});
}

std::array<ComplexVector, 4> cq_basis() {
    return {tensor(ket0(), ket0()), tensor(ket0(), ket1()), tensor(ket1(), ket_plus()),
            tensor(ket1(), ket_minus())};
}

DensityMatrix cq_state(const std::array<double, 4>& lambdas) {
    double sum = 0.0;
    for (double l : lambdas) {
        if (!(l >= 0.0)) throw Error(ErrorCode::OutOfRange, "cq-state weights must be nonnegative");
        sum += l;
    }
    if (std::abs(sum - 1.0) > kHermitianTol) throw Error(ErrorCode::OutOfRange, "cq-state weights must sum to 1");
    const auto basis = cq_basis();
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    for (std::size_t i = 0; i < 4; ++i) m += lambdas[i] * projector(basis[i]);
    return DensityMatrix(m, {2, 2});
}

DensityMatrix embedded_psi_plus(const Dims& dims) {
    require_bipartite(dims);
    if (dims[0] < 2 || dims[1] < 2) throw Error(ErrorCode::DimMismatch, "both parties need dimension >= 2");
    const ComplexVector psi = (basis_ket({0, 1}, dims) + basis_ket({1, 0}, dims)) * kInvSqrt2;
    return DensityMatrix(projector(psi), dims);
}

// --- classical forms ---------------------------------------------------------

void ClassicalForm::validate(double tol) const {
    const auto da = static_cast<Eigen::Index>(dim_a());
    const auto db = static_cast<Eigen::Index>(dim_b());
    if (da == 0 || db == 0) throw Error(ErrorCode::InvalidForm, "empty weight matrix");
    if ((mu.array() < -tol).any()) throw Error(ErrorCode::InvalidForm, "negative weight");
    if (std::abs(mu.sum() - 1.0) > tol) throw Error(ErrorCode::InvalidForm, "weights do not sum to 1");
    if (basis_a.rows() != da || basis_a.cols() != da || !is_unitary(basis_a, tol))
        throw Error(ErrorCode::InvalidForm, "basis of A is not orthonormal");
    if (unitaries_b.size() != static_cast<std::size_t>(da))
        throw Error(ErrorCode::InvalidForm, "need one unitary on B per basis vector of A");
    for (const auto& u : unitaries_b)
        if (u.rows() != db || u.cols() != db || !is_unitary(u, tol))
            throw Error(ErrorCode::InvalidForm, "unitary on B is not unitary");
}

DensityMatrix realize_classical(const ClassicalForm& form) {
    form.validate();
    const auto da = static_cast<Eigen::Index>(form.dim_a());
    const auto db = static_cast<Eigen::Index>(form.dim_b());
    ComplexMatrix m = ComplexMatrix::Zero(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        const ComplexMatrix pa = projector(form.basis_a.col(i));
        const ComplexMatrix& u = form.unitaries_b[static_cast<std::size_t>(i)];
        ComplexMatrix tau = u * form.mu.row(i).transpose().cast<Complex>().asDiagonal() * u.adjoint();
        m += tensor(pa, tau);
    }
    return DensityMatrix(m, {form.dim_a(), form.dim_b()});
}

ClassicalForm classical_form_from_state(const DensityMatrix& rho, double tol) {
    require_bipartite(rho.dims());
    const std::size_t da = rho.dims()[0];
    const std::size_t db = rho.dims()[1];
    const auto marginal = hermitian_eig(partial_trace(rho, Subsystem::A).matrix());
    for (Eigen::Index i = 0; i + 1 < marginal.eigenvalues.size(); ++i)
        if (marginal.eigenvalues(i) - marginal.eigenvalues(i + 1) <= kDegeneracyGap)
            throw Error(ErrorCode::InvalidForm, "marginal on A is degenerate; eigenbasis is not unique");

    ClassicalForm form;
    form.basis_a = marginal.eigenvectors;
    form.mu.resize(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db));
    const ComplexMatrix id_b = ComplexMatrix::Identity(static_cast<Eigen::Index>(db), static_cast<Eigen::Index>(db));
    ComplexMatrix dephased = ComplexMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (std::size_t i = 0; i < da; ++i) {
        const ComplexMatrix embed = tensor(ComplexMatrix(form.basis_a.col(static_cast<Eigen::Index>(i))), id_b);
        const ComplexMatrix tau = embed.adjoint() * rho.matrix() * embed;
        dephased += embed * tau * embed.adjoint();
        const auto block = hermitian_eig(tau);
        for (std::size_t j = 0; j < db; ++j)
            form.mu(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::max(0.0, block.eigenvalues(static_cast<Eigen::Index>(j)));
        form.unitaries_b.push_back(block.eigenvectors);
    }
    if ((dephased - rho.matrix()).norm() > tol * std::max(1.0, rho.op().frobenius_norm()))
        throw Error(ErrorCode::InvalidForm, "state is not classical in the eigenbasis of its A-marginal");
    form.mu /= form.mu.sum();
    return form;
}

// --- tensor structure --------------------------------------------------------

ComplexMatrix partial_trace(const ComplexMatrix& m, const Dims& dims, Subsystem keep) {
    require_bipartite(dims);
    const auto da = static_cast<Eigen::Index>(dims[0]);
    const auto db = static_cast<Eigen::Index>(dims[1]);
    if (m.rows() != da * db || m.cols() != da * db) throw Error(ErrorCode::DimMismatch, "dims do not match matrix");
    if (keep == Subsystem::A) {
        ComplexMatrix out(da, da);
        for (Eigen::Index i = 0; i < da; ++i)
            for (Eigen::Index k = 0; k < da; ++k) out(i, k) = m.block(i * db, k * db, db, db).trace();
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(db, db);
    for (Eigen::Index i = 0; i < da; ++i) out += m.block(i * db, i * db, db, db);
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    const std::size_t kept = keep == Subsystem::A ? rho.dims().at(0) : rho.dims().at(1);
    return DensityMatrix(partial_trace(rho.matrix(), rho.dims(), keep), {kept});
}

DensityMatrix swap_subsystems(const DensityMatrix& rho) {
    require_bipartite(rho.dims());
    const auto da = static_cast<Eigen::Index>(rho.dims()[0]);
    const auto db = static_cast<Eigen::Index>(rho.dims()[1]);
    const auto index_ab = [&](Eigen::Index i, Eigen::Index j) { return i * db + j; };
    const auto index_ba = [&](Eigen::Index j, Eigen::Index i) { return j * da + i; };
    ComplexMatrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < db; ++j)
            for (Eigen::Index k = 0; k < da; ++k)
                for (Eigen::Index l = 0; l < db; ++l) out(index_ba(j, i), index_ba(l, k)) = rho(static_cast<std::size_t>(index_ab(i, j)), static_cast<std::size_t>(index_ab(k, l)));
    return DensityMatrix(out, {rho.dims()[1], rho.dims()[0]});
}

}  // namespace qboundary
