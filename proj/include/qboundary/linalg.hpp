#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "qboundary/errors.hpp"

namespace qboundary {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Subsystem dimensions of a tensor-product space. The row/column index of
/// |i1 i2 ... ik> is the mixed-radix number with i1 most significant, so for
/// two parties |i>|j> sits at i * dims[1] + j.
using Dims = std::vector<std::size_t>;

std::size_t total_dim(const Dims& dims);

// Default tolerances, relative to max(1, ||H||_F).
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kZeroEigenvalueTol = 1e-8;
/// Spectra whose adjacent eigenvalues are closer than this count as degenerate.
inline constexpr double kDegeneracyGap = 1e-7;
/// Largest dimension handled by the dense eigensolver. Diagonal matrices of
/// any size take the fast path.
inline constexpr std::size_t kDenseDimCap = 512;

/// Square complex matrix that is Hermitian within tolerance, tagged with the
/// subsystem dimensions it acts on. Extrapolated operators and partial
/// transposes live here; they need not be positive.
class HermitianOperator {
public:
    HermitianOperator() = default;

    /// Validates squareness, finiteness, dims and ||M - M^dag||_F <= tol *
    /// max(1, ||M||_F); the stored matrix is the exact Hermitian part.
    HermitianOperator(ComplexMatrix matrix, Dims dims, double tol = kHermitianTol);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const Dims& dims() const noexcept { return dims_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
    Complex operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

    double trace() const { return matrix_.trace().real(); }
    double frobenius_norm() const { return matrix_.norm(); }
    bool is_diagonal() const;

    /// Same matrix with a coarser or finer tensor split; the product of the
    /// new dims must equal dim().
    HermitianOperator regrouped(Dims dims) const;

private:
    ComplexMatrix matrix_;
    Dims dims_;
};

/// Hermitian, trace one, positive semidefinite (all within tolerance).
class DensityMatrix {
public:
    DensityMatrix() = default;
    explicit DensityMatrix(HermitianOperator op, double tol = kPsdTol);
    DensityMatrix(ComplexMatrix matrix, Dims dims, double tol = kPsdTol);

    const HermitianOperator& op() const noexcept { return op_; }
    const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
    const Dims& dims() const noexcept { return op_.dims(); }
    std::size_t dim() const noexcept { return op_.dim(); }
    Complex operator()(std::size_t row, std::size_t col) const { return op_(row, col); }

    DensityMatrix regrouped(Dims dims) const;

private:
    HermitianOperator op_;
};

/// Eigenvalues sorted descending with matching orthonormal eigenvector
/// columns. Each eigenvector has its first largest-modulus component real
/// and nonnegative.
struct SpectralDecomposition {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexMatrix reconstruct() const;
};

/// Cyclic Jacobi eigensolver. Throws NotHermitian when ||H - H^dag||_F >
/// tol * max(1, ||H||_F) and OutOfRange above kDenseDimCap unless H is
/// diagonal.
SpectralDecomposition hermitian_eig(const ComplexMatrix& h, double tol = kHermitianTol);
SpectralDecomposition hermitian_eig(const HermitianOperator& h);

/// Eigenvalues only (descending); skips eigenvector accumulation.
RealVector hermitian_eigenvalues(const ComplexMatrix& h, double tol = kHermitianTol);
RealVector hermitian_eigenvalues(const HermitianOperator& h);

double min_eigenvalue(const HermitianOperator& h);

double trace_norm(const HermitianOperator& h);
double trace_norm(const ComplexMatrix& h, double tol = kHermitianTol);

/// delta(rho, sigma) = 1/2 Tr|rho - sigma|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Kronecker product in lexicographic index order.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// lambda_min(H) >= -tol * max(1, ||H||_F).
bool is_psd(const HermitianOperator& h, double tol = kPsdTol);

double hermiticity_defect(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& u, double tol = kHermitianTol);

/// Outer product |v><v|.
ComplexMatrix projector(const ComplexVector& v);

}  // namespace qboundary
