#include "qboundary/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qboundary {

namespace {

constexpr double kJacobiOffDiagonalTol = 1e-12;
constexpr int kMaxSweeps = 64;

double scale_of(double norm) { return std::max(1.0, norm); }

void require_square(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        std::ostringstream os;
        os << "expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
        throw Error(ErrorCode::DimMismatch, os.str());
    }
}

void require_hermitian(const ComplexMatrix& m, double tol) {
    require_square(m);
    if (!m.allFinite()) throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");
    const double defect = hermiticity_defect(m);
    if (defect > tol * scale_of(m.norm())) {
        std::ostringstream os;
        os << "||H - H^dag||_F = " << defect << " exceeds tolerance";
        throw Error(ErrorCode::NotHermitian, os.str());
    }
}

bool off_diagonal_is_zero(const ComplexMatrix& m) {
    const Eigen::Index n = m.rows();
    for (Eigen::Index c = 0; c < n; ++c)
        for (Eigen::Index r = 0; r < n; ++r)
            if (r != c && m(r, c) != Complex(0.0, 0.0)) return false;
    return true;
}

double off_diagonal_norm(const ComplexMatrix& a) {
    const Eigen::Index n = a.rows();
    double sum = 0.0;
    for (Eigen::Index c = 0; c < n; ++c)
        for (Eigen::Index r = 0; r < n; ++r)
            if (r != c) sum += std::norm(a(r, c));
    return std::sqrt(sum);
}

// One complex Jacobi rotation annihilating a(p, q). The rotation is
// J = D R with D = diag(1, e^{-i alpha}) removing the phase of a(p, q) and
// R the real symmetric Jacobi rotation; a <- J^dag a J, v <- v J.
void rotate(ComplexMatrix& a, ComplexMatrix* v, Eigen::Index p, Eigen::Index q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = apq / mag;  // e^{i alpha}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
    const double c = 1.0 / std::hypot(t, 1.0);
    const double s = t * c;
    const Complex conj_phase = std::conj(phase);

    const Eigen::Index n = a.rows();
    // a <- a J
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * conj_phase * akq;
        a(k, q) = s * akp + c * conj_phase * akq;
    }
    // a <- J^dag a
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    a(p, q) = Complex(0.0, 0.0);
    a(q, p) = Complex(0.0, 0.0);
    a(p, p) = Complex(app - t * mag, 0.0);
    a(q, q) = Complex(aqq + t * mag, 0.0);

    if (v != nullptr) {
        ComplexMatrix& vm = *v;
        for (Eigen::Index k = 0; k < n; ++k) {
            const Complex vkp = vm(k, p);
            const Complex vkq = vm(k, q);
            vm(k, p) = c * vkp - s * conj_phase * vkq;
            vm(k, q) = s * vkp + c * conj_phase * vkq;
        }
    }
}

void sweep(ComplexMatrix& a, ComplexMatrix* v) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index p = 0; p + 1 < n; ++p)
        for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
}

// Diagonalizes the exact Hermitian part of `h` in place; returns the
// unsorted eigenvalues, eigenvectors in *v when requested.
RealVector jacobi(ComplexMatrix a, ComplexMatrix* v) {
    const Eigen::Index n = a.rows();
    if (v != nullptr) *v = ComplexMatrix::Identity(n, n);
    const double norm = a.norm();
    if (norm > 0.0) {
        int sweeps = 0;
        while (off_diagonal_norm(a) > kJacobiOffDiagonalTol * norm && sweeps < kMaxSweeps) {
            sweep(a, v);
            ++sweeps;
        }
        // Quadratic convergence: one more sweep drives the residual to
        // rounding level, which matters for eigenvalues near zero.
        if (off_diagonal_norm(a) > 0.0) sweep(a, v);
    }
    RealVector values(n);
    for (Eigen::Index i = 0; i < n; ++i) values(i) = a(i, i).real();
    return values;
}

std::vector<Eigen::Index> descending_order(const RealVector& values) {
    std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return values(a) > values(b); });
    return order;
}

void fix_phase(Eigen::Ref<ComplexVector> v) {
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    if (best_mag > 0.0) v *= std::conj(v(best)) / best_mag;
    v(best) = Complex(v(best).real(), 0.0);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

void require_dense_capacity(const ComplexMatrix& m) {
    if (static_cast<std::size_t>(m.rows()) > kDenseDimCap) {
        std::ostringstream os;
        os << "dense eigensolver supports dimension <= " << kDenseDimCap << ", got " << m.rows();
        throw Error(ErrorCode::OutOfRange, os.str());
    }
}

}  // namespace

std::size_t total_dim(const Dims& dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

double hermiticity_defect(const ComplexMatrix& m) { return (m - m.adjoint()).norm(); }

bool is_unitary(const ComplexMatrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    const auto id = ComplexMatrix::Identity(u.rows(), u.cols());
    return (u.adjoint() * u - id).norm() <= tol * scale_of(static_cast<double>(u.rows()));
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

// --- HermitianOperator -------------------------------------------------------

HermitianOperator::HermitianOperator(ComplexMatrix matrix, Dims dims, double tol) : dims_(std::move(dims)) {
    require_hermitian(matrix, tol);
    if (dims_.empty()) dims_ = {static_cast<std::size_t>(matrix.rows())};
    if (total_dim(dims_) != static_cast<std::size_t>(matrix.rows()))
        throw Error(ErrorCode::DimMismatch, "subsystem dimensions do not multiply to the matrix size");
    for (auto d : dims_)
        if (d == 0) throw Error(ErrorCode::DimMismatch, "subsystem dimension 0");
    matrix_ = hermitian_part(matrix);
}

bool HermitianOperator::is_diagonal() const { return off_diagonal_is_zero(matrix_); }

HermitianOperator HermitianOperator::regrouped(Dims dims) const {
    if (total_dim(dims) != dim()) throw Error(ErrorCode::DimMismatch, "regrouping must preserve total dimension");
    HermitianOperator out = *this;
    out.dims_ = std::move(dims);
    return out;
}

// --- DensityMatrix -----------------------------------------------------------

DensityMatrix::DensityMatrix(HermitianOperator op, double tol) : op_(std::move(op)) {
    const double tr = op_.trace();
    if (std::abs(tr - 1.0) > tol * scale_of(op_.frobenius_norm())) {
        std::ostringstream os;
        os << "trace " << tr << " differs from 1";
        throw Error(ErrorCode::InvariantViolation, os.str());
    }
    if (!is_psd(op_, tol)) {
        std::ostringstream os;
        os << "minimum eigenvalue " << min_eigenvalue(op_) << " is negative";
        throw Error(ErrorCode::NotPSD, os.str());
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Dims dims, double tol)
    : DensityMatrix(HermitianOperator(std::move(matrix), std::move(dims), tol), tol) {}

DensityMatrix DensityMatrix::regrouped(Dims dims) const {
    DensityMatrix out = *this;
    out.op_ = op_.regrouped(std::move(dims));
    return out;
}

// --- spectra -----------------------------------------------------------------

ComplexMatrix SpectralDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& h, double tol) {
    require_hermitian(h, tol);
    const ComplexMatrix a = hermitian_part(h);
    const Eigen::Index n = a.rows();

    RealVector raw;
    ComplexMatrix vectors;
    if (off_diagonal_is_zero(a)) {
        raw = a.diagonal().real();
        vectors = ComplexMatrix::Identity(n, n);
    } else {
        require_dense_capacity(a);
        raw = jacobi(a, &vectors);
    }

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    const auto order = descending_order(raw);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.eigenvalues(i) = raw(order[static_cast<std::size_t>(i)]);
        out.eigenvectors.col(i) = vectors.col(order[static_cast<std::size_t>(i)]);
        fix_phase(out.eigenvectors.col(i));
    }
    return out;
}

SpectralDecomposition hermitian_eig(const HermitianOperator& h) { return hermitian_eig(h.matrix()); }

RealVector hermitian_eigenvalues(const ComplexMatrix& h, double tol) {
    require_hermitian(h, tol);
    const ComplexMatrix a = hermitian_part(h);
    RealVector raw;
    if (off_diagonal_is_zero(a)) {
        raw = a.diagonal().real();
    } else {
        require_dense_capacity(a);
        raw = jacobi(a, nullptr);
    }
    std::sort(raw.begin(), raw.end(), std::greater<>());
    return raw;
}

RealVector hermitian_eigenvalues(const HermitianOperator& h) { return hermitian_eigenvalues(h.matrix()); }

double min_eigenvalue(const HermitianOperator& h) {
    const RealVector values = hermitian_eigenvalues(h);
    return values(values.size() - 1);
}

double trace_norm(const ComplexMatrix& h, double tol) {
    return hermitian_eigenvalues(h, tol).cwiseAbs().sum();
}

double trace_norm(const HermitianOperator& h) { return trace_norm(h.matrix()); }

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw Error(ErrorCode::DimMismatch, "trace distance between different dimensions");
    return 0.5 * trace_norm(rho.matrix() - sigma.matrix());
}

bool is_psd(const HermitianOperator& h, double tol) {
    return min_eigenvalue(h) >= -tol * scale_of(h.frobenius_norm());
}

// --- tensor products ---------------------------------------------------------

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return HermitianOperator(tensor(a.matrix(), b.matrix()), std::move(dims));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) { return DensityMatrix(tensor(a.op(), b.op())); }

}  // namespace qboundary
