#include "qboundary/discord.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qboundary {

namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

ComplexMatrix lift_a(const ComplexMatrix& basis_a, std::size_t db) {
    const auto n = static_cast<Eigen::Index>(db);
    return tensor(basis_a, ComplexMatrix(ComplexMatrix::Identity(n, n)));
}

void require_basis(const DensityMatrix& rho, const ComplexMatrix& basis_a, double tol) {
    require_bipartite(rho.dims());
    const auto da = static_cast<Eigen::Index>(rho.dims()[0]);
    if (basis_a.rows() != da || basis_a.cols() != da)
        throw Error(ErrorCode::DimMismatch, "basis does not match the dimension of A");
    if (!is_unitary(basis_a, tol)) throw Error(ErrorCode::NotOrthonormal, "basis of A is not orthonormal");
}

// D in frame coordinates: zero every block <i|.|k> with i != k.
ComplexMatrix dephase_matrix(const ComplexMatrix& m, const ComplexMatrix& basis_a, std::size_t db) {
    const ComplexMatrix w = lift_a(basis_a, db);
    ComplexMatrix frame = w.adjoint() * m * w;
    const auto n = static_cast<Eigen::Index>(db);
    const Eigen::Index da = basis_a.cols();
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index k = 0; k < da; ++k)
            if (i != k) frame.block(i * n, k * n, n, n).setZero();
    return w * frame * w.adjoint();
}

}  // namespace

const char* to_string(Classicality c) {
    switch (c) {
        case Classicality::ClassicalWrtA: return "ClassicalWrtA";
        case Classicality::Discordant: return "Discordant";
        case Classicality::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

DensityMatrix dephase(const DensityMatrix& rho, const ComplexMatrix& basis_a, double tol) {
    require_basis(rho, basis_a, tol);
    return DensityMatrix(dephase_matrix(rho.matrix(), basis_a, rho.dims()[1]), rho.dims());
}

BasisTest is_classical_wrt_basis(const DensityMatrix& rho, const ComplexMatrix& basis_a, double tol) {
    require_basis(rho, basis_a, tol);
    BasisTest out;
    out.residual = (dephase_matrix(rho.matrix(), basis_a, rho.dims()[1]) - rho.matrix()).norm();
    out.threshold = tol * std::max(1.0, rho.op().frobenius_norm());
    out.classical = out.residual <= out.threshold;
    return out;
}

ClassicalityVerdict classify(const DensityMatrix& rho, double tol, const std::optional<ComplexMatrix>& candidate) {
    require_bipartite(rho.dims());
    ClassicalityVerdict out;

    if (candidate) {
        const BasisTest test = is_classical_wrt_basis(rho, *candidate, tol);
        if (test.classical) {
            out.status = Classicality::ClassicalWrtA;
            out.basis = *candidate;
            out.residual = test.residual;
            out.threshold = test.threshold;
            return out;
        }
    }

    const ComplexMatrix marginal = partial_trace(rho.matrix(), rho.dims(), Subsystem::A);
    const SpectralDecomposition spectrum = hermitian_eig(marginal);
    double min_gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i + 1 < spectrum.eigenvalues.size(); ++i)
        min_gap = std::min(min_gap, spectrum.eigenvalues(i) - spectrum.eigenvalues(i + 1));

    if (min_gap <= kDegeneracyGap) {
        std::ostringstream os;
        os << "marginal on A is degenerate (smallest gap " << min_gap
           << "); no unique eigenbasis to test";
        if (candidate) os << " and the supplied basis does not dephase-invariantly fix the state";
        out.status = Classicality::Indeterminate;
        out.reason = os.str();
        return out;
    }

    const BasisTest test = is_classical_wrt_basis(rho, spectrum.eigenvectors, tol);
    // Computed eigenvectors carry an error of order eps ||rho_A|| / gap, which
    // leaks into the residual.
    const double eigvec_slack = 64.0 * kEpsilon * std::max(1.0, marginal.norm()) / min_gap *
                                std::max(1.0, rho.op().frobenius_norm());
    out.basis = spectrum.eigenvectors;
    out.residual = test.residual;
    out.threshold = test.threshold + eigvec_slack;
    if (test.classical) {
        out.status = Classicality::ClassicalWrtA;
    } else if (test.residual > out.threshold) {
        out.status = Classicality::Discordant;
    } else {
        out.status = Classicality::Indeterminate;
        out.reason = "residual lies within the eigenvector error bound of the marginal";
    }
    return out;
}

ClassicalityVerdict depolarize_classify(const DensityMatrix& rho, double t, double tol) {
    if (!(t > 0.0 && t <= 1.0)) throw Error(ErrorCode::OutOfRange, "t outside (0, 1]");
    const auto d = static_cast<Eigen::Index>(rho.dim());
    const ComplexMatrix mixed = (1.0 - t) * ComplexMatrix::Identity(d, d) / static_cast<double>(d) + t * rho.matrix();
    return classify(DensityMatrix(mixed, rho.dims()), tol);
}

EpsilonDiscordant epsilon_discordant(const ClassicalForm& form, const DensityMatrix& rho1, double eps, double tol) {
    form.validate(tol);
    if (!(eps >= 0.0 && eps <= 1.0)) {
        std::ostringstream os;
        os << "eps = " << eps << " outside [0, 1]";
        throw Error(ErrorCode::EpsOutOfRange, os.str());
    }
    const std::size_t da = form.dim_a();
    const std::size_t db = form.dim_b();
    const Dims dims{da, db};
    if (rho1.dims() != dims) throw Error(ErrorCode::DimMismatch, "rho1 does not match the form's dims");
    if (da < 2 || db < 2) throw Error(ErrorCode::DimMismatch, "both parties need dimension >= 2");

    const double mu00 = form.mu(0, 0);
    if (mu00 > form.mu.minCoeff() + tol) throw Error(ErrorCode::BadOrdering, "mu00 is not the smallest weight");
    const auto nb = static_cast<Eigen::Index>(db);
    if ((form.unitaries_b[0] - ComplexMatrix::Identity(nb, nb)).norm() > tol)
        throw Error(ErrorCode::BadOrdering, "U_0 is not the identity");

    EpsilonDiscordant out;
    out.frame = lift_a(form.basis_a, db);
    const DensityMatrix rho1_frame(out.frame.adjoint() * rho1.matrix() * out.frame, dims);
    if (std::abs(rho1_frame(0, 0)) > tol) throw Error(ErrorCode::BadDirection, "<00|rho1|00> does not vanish");
    if (std::abs(rho1_frame(db, 1)) <= tol) throw Error(ErrorCode::BadDirection, "<10|rho1|01> vanishes");

    const DensityMatrix rho = realize_classical(form);
    const double d = static_cast<double>(da * db);
    const bool uniform = form.mu.maxCoeff() - form.mu.minCoeff() <= tol;
    out.z = uniform ? 0.0 : 1.0 - d * mu00;

    const auto n = static_cast<Eigen::Index>(da * db);
    ComplexMatrix v = ComplexMatrix::Zero(n, n);
    if (uniform) {
        v(0, 0) = 1.0;
    } else {
        for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(da); ++i) {
            const ComplexMatrix& u = form.unitaries_b[static_cast<std::size_t>(i)];
            const RealVector weights = (form.mu.row(i).array() - mu00).transpose() / out.z;
            v.block(i * nb, i * nb, nb, nb) = u * weights.cast<Complex>().asDiagonal() * u.adjoint();
        }
    }
    out.rho_v = DensityMatrix(v, dims);

    if (eps == 0.0) {
        out.state = rho;
        out.k = out.z > 0.0 ? 1.0 / out.z : 1.0;
        out.eps_prime = 0.0;
        out.rho_hat = out.rho_v;
        return out;
    }

    out.state = DensityMatrix((1.0 - eps) * rho.matrix() + eps * rho1.matrix(), dims);
    out.k = 1.0 / ((1.0 - eps) * out.z + eps);
    out.eps_prime = std::min(1.0, out.k * eps);
    out.rho_hat = DensityMatrix((1.0 - out.eps_prime) * out.rho_v.matrix() + out.eps_prime * rho1_frame.matrix(), dims);
    out.certificate = peres_check(out.rho_hat, tol);
    return out;
}

}  // namespace qboundary
