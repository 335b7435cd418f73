#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qboundary/linalg.hpp"

namespace qboundary {

enum class Subsystem { A, B };

// Single-qubit kets and gates used by the named families.
ComplexVector ket0();
ComplexVector ket1();
ComplexVector ket_plus();   // (|0> + |1>)/sqrt(2)
ComplexVector ket_minus();  // (|0> - |1>)/sqrt(2)
ComplexMatrix pauli_x();
ComplexMatrix hadamard();

/// (|a> +- |b>)/sqrt(2) in a d-dimensional space, real coefficients.
ComplexVector superposition(std::size_t d, std::size_t a, std::size_t b, int sign);

/// Standard unit vector |labels...> in the lexicographic product basis.
ComplexVector basis_ket(const std::vector<std::size_t>& labels, const Dims& dims);

DensityMatrix pure_state(const ComplexVector& psi, Dims dims);
DensityMatrix maximally_mixed(Dims dims);

// Bell states on two qubits.
ComplexVector bell_phi_plus();
ComplexVector bell_phi_minus();
ComplexVector bell_psi_plus();
ComplexVector bell_psi_minus();

/// lambda/3 [psi+ + phi+ + phi-] + (1 - lambda) psi-, lambda in [0, 1].
DensityMatrix werner(double lambda);

/// (1 - t) I/2^N + t target on N qubits. Returned as a bare operator because
/// the extrapolated side (t < t_b) is not a state.
HermitianOperator pseudo_pure(double t, const DensityMatrix& target);

/// Product thermal state of N qubits with polarization eta in [0, 1];
/// diagonal with weight ((1+eta)/2)^{N-|i|} ((1-eta)/2)^{|i|} on |i>.
DensityMatrix thermal_n(double eta, std::size_t n_qubits);

/// Diagonal of thermal_n without forming the dense matrix (any N <= 30).
RealVector thermal_spectrum(double eta, std::size_t n_qubits);

/// The nine product vectors on two qutrits that mix into the locally
/// indistinguishable state (index 0 is |1>|1>).
std::vector<ComplexVector> nine_qutrit_states();

/// 1/8 sum_{i=2}^{9} |psi_i><psi_i| over the list above.
DensityMatrix nine_state_mixture();

/// (|00><00| + |++><++|)/2.
DensityMatrix example5_state();

/// Weights for |00>, |01>, |1+>, |1->.
DensityMatrix cq_state(const std::array<double, 4>& lambdas);

/// Basis vectors of the cq-state family in the order |00>, |01>, |1+>, |1->.
std::array<ComplexVector, 4> cq_basis();

/// Psi+ = (|01> + |10>)/sqrt(2) embedded in the {|0>,|1>} x {|0>,|1>} corner
/// of a dA x dB system (dA, dB >= 2).
DensityMatrix embedded_psi_plus(const Dims& dims);

/// rho = sum_ij mu_ij |a_i><a_i| (x) U_i |j><j| U_i^dag.
struct ClassicalForm {
    Eigen::MatrixXd mu;                // dA x dB, nonnegative, sums to 1
    ComplexMatrix basis_a;             // columns |a_i>, orthonormal
    std::vector<ComplexMatrix> unitaries_b;  // U_i, one per row of mu

    std::size_t dim_a() const { return static_cast<std::size_t>(mu.rows()); }
    std::size_t dim_b() const { return static_cast<std::size_t>(mu.cols()); }
    void validate(double tol = kHermitianTol) const;
};

DensityMatrix realize_classical(const ClassicalForm& form);

/// Recovers a ClassicalForm from a state whose A-marginal is nondegenerate
/// and which is classical in that marginal's eigenbasis. Throws InvalidForm
/// otherwise.
ClassicalForm classical_form_from_state(const DensityMatrix& rho, double tol = kHermitianTol);

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);
ComplexMatrix partial_trace(const ComplexMatrix& m, const Dims& dims, Subsystem keep);

/// <ji| rho' |lk> = <ij| rho |kl>.
DensityMatrix swap_subsystems(const DensityMatrix& rho);

/// Throws DimMismatch unless the operator is split into exactly two parties.
void require_bipartite(const Dims& dims);

}  // namespace qboundary
