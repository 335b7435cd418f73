#pragma once

#include <cstddef>
#include <optional>

#include "qboundary/linalg.hpp"
#include "qboundary/states.hpp"

namespace qboundary {

/// Lemma-style certificate: <i|H|i> vanishes while <i|H|j> does not, so H
/// has a negative eigenvalue.
struct ZeroDiagonalWitness {
    std::size_t row = 0;
    std::size_t col = 0;
    Complex value;
};

/// Single-copy distillability witness |Psi> = |e1 f1> + |e2 f2> with
/// <Psi|PT(rho)|Psi> < 0, e1 _|_ e2 and f1 _|_ f2. Here |Psi> = sin(theta)|11>
/// - e^{i phi} cos(theta)|00>.
struct DistillWitness {
    double theta = 0.0;
    double phi = 0.0;
    double value = 0.0;
    ComplexVector e1, f1, e2, f2;
    ComplexVector psi;
};

enum class PtVerdict { PPT, NPT };

/// NPT means "entangled" (Peres); PPT only means "not certified entangled".
struct EntanglementCertificate {
    PtVerdict verdict = PtVerdict::PPT;
    double min_pt_eigenvalue = 0.0;
    ComplexVector witness_vector;  // eigenvector of PT(rho) for min_pt_eigenvalue
    std::optional<ZeroDiagonalWitness> zero_diag_witness;
    std::optional<DistillWitness> distill_witness;
    /// True when the spectrum alone cleared -tol; false when NPT rests on a
    /// structural witness whose negativity is below the spectral threshold.
    bool spectral = false;
};

/// <i1 j1|PT(L)|i2 j2> = <i2 j1|L|i1 j2>, transpose on subsystem A in the
/// computational basis.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const Dims& dims);
HermitianOperator partial_transpose(const HermitianOperator& op);

EntanglementCertificate peres_check(const DensityMatrix& rho, double tol = kPsdTol);

/// Smallest (i, j) in row-major order with |H_ii| <= tol and |H_ij| > tol
/// whose 2x2 principal minor H_ii H_jj - |H_ij|^2 is negative.
std::optional<ZeroDiagonalWitness> zero_diagonal_witness(const HermitianOperator& h, double tol = kPsdTol);

/// Minimizes <Psi_theta|PT(rho)|Psi_theta> in closed form from
/// a = <11|PT|11>, c = <00|PT|00> and b e^{i phi} = <00|PT|11>. Returns a
/// witness when b > tol and the minimum is negative.
std::optional<DistillWitness> distill_witness_theta(const DensityMatrix& rho, double tol = kPsdTol);

/// Closed-form minimum (a + c)/2 - sqrt((a - c)^2/4 + b^2), evaluated without
/// cancellation.
double distill_witness_minimum(double a, double b, double c);

struct ProductVector {
    ComplexVector a;
    ComplexVector b;

    ComplexVector full() const { return tensor(a, b); }
};

/// Splits a vector on dims [dA, dB] into |a>|b>; NotProductVector if its
/// Schmidt rank exceeds one.
ProductVector factor_product(const ComplexVector& v, const Dims& dims, double tol = kHermitianTol);

/// Local unitary that moves a product zero-eigenvector to |00>.
struct CanonicalFrame {
    ComplexMatrix u_a;
    ComplexMatrix u_b;
    DensityMatrix rotated;  // (U_A (x) U_B) rho (U_A (x) U_B)^dag

    ComplexMatrix local_unitary() const { return tensor(u_a, u_b); }
};

/// Gram-Schmidt completion of {v} by standard basis vectors in index order;
/// rows of the result are the new basis, so U v = |0>.
ComplexMatrix unitary_to_zero(const ComplexVector& v, double tol = kHermitianTol);

CanonicalFrame canonical_frame(const DensityMatrix& rho, const ProductVector& zero_vec, double tol = kPsdTol);

struct EpsilonEntangled {
    DensityMatrix state;          // tau_eps in the caller's basis
    CanonicalFrame frame;         // frame.rotated is rho_b in the canonical frame
    DensityMatrix frame_state;    // tau_eps in the canonical frame
    EntanglementCertificate certificate;  // computed on frame_state
};

/// tau_eps = (1 - eps) rho_b + eps rho1 where rho1 is psi+ on the
/// {|0>,|1>}^2 corner of the canonical frame, rotated back.
EpsilonEntangled epsilon_entangled_from_void(const DensityMatrix& rho_b, const ProductVector& zero_vec, double eps,
                                             double tol = kPsdTol);

enum class GbRegion { InsideTraceBall, InsideFrobeniusBall, Outside };

struct GbClassification {
    GbRegion region = GbRegion::Outside;
    double trace_deviation = 0.0;      // Tr|rho - I/d|
    double frobenius_deviation = 0.0;  // ||rho - I/d||_2
    double radius = 0.0;               // 1/d
};

/// Position relative to the separable ball around I/d.
GbClassification gurvits_barnum(const DensityMatrix& rho);

const char* to_string(PtVerdict v);
const char* to_string(GbRegion r);

}  // namespace qboundary
