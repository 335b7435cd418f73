#include "qboundary/entanglement.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace qboundary {

namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

std::size_t index2(std::size_t i, std::size_t j, std::size_t db) { return i * db + j; }

void require_qubit_corner(const Dims& dims) {
    require_bipartite(dims);
    if (dims[0] < 2 || dims[1] < 2) throw Error(ErrorCode::DimMismatch, "both parties need dimension >= 2");
}

// x y - b^2 < 0 with a margin that rounding of the three entries cannot
// close; a minor that is exactly zero (as for product states) never passes.
bool robustly_negative_minor(double x, double y, double b) {
    const double prod = x * y;
    return b * b - prod > 64.0 * kEpsilon * (b * b + std::abs(prod));
}

}  // namespace

const char* to_string(PtVerdict v) { return v == PtVerdict::NPT ? "NPT" : "PPT"; }

const char* to_string(GbRegion r) {
    switch (r) {
        case GbRegion::InsideTraceBall: return "InsideTraceBall";
        case GbRegion::InsideFrobeniusBall: return "InsideFrobeniusBall";
        case GbRegion::Outside: return "Outside";
    }
    return "Outside";
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const Dims& dims) {
    require_bipartite(dims);
    const std::size_t da = dims[0];
    const std::size_t db = dims[1];
    if (static_cast<std::size_t>(m.rows()) != da * db || m.rows() != m.cols())
        throw Error(ErrorCode::DimMismatch, "dims do not match matrix");
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i1 = 0; i1 < da; ++i1)
        for (std::size_t j1 = 0; j1 < db; ++j1)
            for (std::size_t i2 = 0; i2 < da; ++i2)
                for (std::size_t j2 = 0; j2 < db; ++j2)
                    out(static_cast<Eigen::Index>(index2(i1, j1, db)), static_cast<Eigen::Index>(index2(i2, j2, db))) =
                        m(static_cast<Eigen::Index>(index2(i2, j1, db)), static_cast<Eigen::Index>(index2(i1, j2, db)));
    return out;
}

HermitianOperator partial_transpose(const HermitianOperator& op) {
    return HermitianOperator(partial_transpose(op.matrix(), op.dims()), op.dims());
}

std::optional<ZeroDiagonalWitness> zero_diagonal_witness(const HermitianOperator& h, double tol) {
    const auto n = static_cast<Eigen::Index>(h.dim());
    const ComplexMatrix& m = h.matrix();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double hii = m(i, i).real();
        if (std::abs(hii) > tol) continue;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == i) continue;
            const double off = std::abs(m(i, j));
            if (off <= tol) continue;
            if (robustly_negative_minor(hii, m(j, j).real(), off))
                return ZeroDiagonalWitness{static_cast<std::size_t>(i), static_cast<std::size_t>(j), m(i, j)};
        }
    }
    return std::nullopt;
}

double distill_witness_minimum(double a, double b, double c) {
    const double mean = 0.5 * (a + c);
    const double radius = std::hypot(0.5 * (a - c), b);
    if (mean > 0.0) return (a * c - b * b) / (mean + radius);
    return mean - radius;
}

std::optional<DistillWitness> distill_witness_theta(const DensityMatrix& rho, double tol) {
    require_qubit_corner(rho.dims());
    const std::size_t da = rho.dims()[0];
    const std::size_t db = rho.dims()[1];
    // PT entries read straight from rho: <11|PT|11> = <11|rho|11>,
    // <00|PT|11> = <10|rho|01>.
    const double a = rho(index2(1, 1, db), index2(1, 1, db)).real();
    const double c = rho(index2(0, 0, db), index2(0, 0, db)).real();
    const Complex coupling = rho(index2(1, 0, db), index2(0, 1, db));
    const double b = std::abs(coupling);
    if (b <= tol) return std::nullopt;

    if (!robustly_negative_minor(a, c, b)) return std::nullopt;
    const double value = distill_witness_minimum(a, b, c);

    DistillWitness w;
    w.phi = std::arg(coupling);
    w.theta = 0.5 * std::atan2(2.0 * b, a - c);
    w.value = value;
    const Complex phase = std::polar(1.0, w.phi);
    w.e1 = ComplexVector::Zero(static_cast<Eigen::Index>(da));
    w.e2 = ComplexVector::Zero(static_cast<Eigen::Index>(da));
    w.f1 = ComplexVector::Zero(static_cast<Eigen::Index>(db));
    w.f2 = ComplexVector::Zero(static_cast<Eigen::Index>(db));
    w.e1(1) = std::sin(w.theta);
    w.f1(1) = 1.0;
    w.e2(0) = -phase * std::cos(w.theta);
    w.f2(0) = 1.0;
    w.psi = tensor(w.e1, w.f1) + tensor(w.e2, w.f2);
    return w;
}

EntanglementCertificate peres_check(const DensityMatrix& rho, double tol) {
    require_bipartite(rho.dims());
    const HermitianOperator pt = partial_transpose(rho.op());
    const auto spectrum = hermitian_eig(pt);
    const Eigen::Index last = spectrum.eigenvalues.size() - 1;

    EntanglementCertificate cert;
    cert.min_pt_eigenvalue = spectrum.eigenvalues(last);
    cert.witness_vector = spectrum.eigenvectors.col(last);
    cert.spectral = cert.min_pt_eigenvalue < -tol * std::max(1.0, pt.frobenius_norm());
    cert.zero_diag_witness = zero_diagonal_witness(pt, tol);
    if (rho.dims()[0] >= 2 && rho.dims()[1] >= 2) cert.distill_witness = distill_witness_theta(rho, tol);
    const bool structural = cert.zero_diag_witness.has_value() || cert.distill_witness.has_value();
    cert.verdict = (cert.spectral || structural) ? PtVerdict::NPT : PtVerdict::PPT;
    return cert;
}

ProductVector factor_product(const ComplexVector& v, const Dims& dims, double tol) {
    require_bipartite(dims);
    const auto da = static_cast<Eigen::Index>(dims[0]);
    const auto db = static_cast<Eigen::Index>(dims[1]);
    if (v.size() != da * db) throw Error(ErrorCode::DimMismatch, "vector length does not match dims");
    const double norm = v.norm();
    if (norm == 0.0) throw Error(ErrorCode::NotProductVector, "zero vector");

    ComplexMatrix m(da, db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < db; ++j) m(i, j) = v(i * db + j);
    Eigen::Index i0 = 0;
    Eigen::Index j0 = 0;
    m.cwiseAbs().maxCoeff(&i0, &j0);
    ComplexVector a = m.col(j0);
    ComplexVector b = m.row(i0).transpose() / m(i0, j0);
    if ((m - a * b.transpose()).norm() > tol * norm)
        throw Error(ErrorCode::NotProductVector, "vector has Schmidt rank > 1");
    const double na = a.norm();
    const double nb = b.norm();
    return ProductVector{a / na, b / nb};
}

ComplexMatrix unitary_to_zero(const ComplexVector& v, double tol) {
    const Eigen::Index d = v.size();
    if (v.norm() == 0.0) throw Error(ErrorCode::NotProductVector, "zero vector");
    std::vector<ComplexVector> basis{v.normalized()};
    for (Eigen::Index k = 0; k < d && static_cast<Eigen::Index>(basis.size()) < d; ++k) {
        ComplexVector w = ComplexVector::Unit(d, k);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) w -= b.dot(w) * b;
        const double norm = w.norm();
        if (norm > tol) basis.push_back(w / norm);
    }
    ComplexMatrix u(d, d);
    for (Eigen::Index r = 0; r < d; ++r) u.row(r) = basis[static_cast<std::size_t>(r)].adjoint();
    return u;
}

CanonicalFrame canonical_frame(const DensityMatrix& rho, const ProductVector& zero_vec, double tol) {
    require_qubit_corner(rho.dims());
    if (static_cast<std::size_t>(zero_vec.a.size()) != rho.dims()[0] ||
        static_cast<std::size_t>(zero_vec.b.size()) != rho.dims()[1])
        throw Error(ErrorCode::DimMismatch, "product vector does not match subsystem dims");
    const ComplexVector full = zero_vec.full().normalized();
    if ((rho.matrix() * full).norm() > tol * std::max(1.0, rho.op().frobenius_norm()))
        throw Error(ErrorCode::NotZeroEigenvector, "rho does not annihilate the product vector");

    CanonicalFrame frame;
    frame.u_a = unitary_to_zero(zero_vec.a);
    frame.u_b = unitary_to_zero(zero_vec.b);
    const ComplexMatrix u = frame.local_unitary();
    frame.rotated = DensityMatrix(u * rho.matrix() * u.adjoint(), rho.dims());
    if (std::abs(frame.rotated(0, 0)) > tol)
        throw Error(ErrorCode::NotZeroEigenvector, "<00|rho'|00> does not vanish in the rotated frame");
    return frame;
}

EpsilonEntangled epsilon_entangled_from_void(const DensityMatrix& rho_b, const ProductVector& zero_vec, double eps,
                                             double tol) {
    if (!(eps > 0.0 && eps <= 1.0)) {
        std::ostringstream os;
        os << "eps = " << eps << " outside (0, 1]";
        throw Error(ErrorCode::EpsOutOfRange, os.str());
    }
    EpsilonEntangled out;
    out.frame = canonical_frame(rho_b, zero_vec, tol);
    const DensityMatrix direction = embedded_psi_plus(rho_b.dims());
    out.frame_state =
        DensityMatrix((1.0 - eps) * out.frame.rotated.matrix() + eps * direction.matrix(), rho_b.dims());
    const ComplexMatrix u = out.frame.local_unitary();
    out.state = DensityMatrix(u.adjoint() * out.frame_state.matrix() * u, rho_b.dims());
    out.certificate = peres_check(out.frame_state, tol);
    return out;
}

GbClassification gurvits_barnum(const DensityMatrix& rho) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    const ComplexMatrix deviation = rho.matrix() - ComplexMatrix::Identity(d, d) / static_cast<double>(d);
    GbClassification out;
    out.radius = 1.0 / static_cast<double>(d);
    out.trace_deviation = trace_norm(deviation);
    out.frobenius_deviation = deviation.norm();
    if (out.trace_deviation < out.radius)
        out.region = GbRegion::InsideTraceBall;
    else if (out.frobenius_deviation < out.radius)
        out.region = GbRegion::InsideFrobeniusBall;
    else
        out.region = GbRegion::Outside;
    return out;
}

}  // namespace qboundary
