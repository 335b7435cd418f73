#pragma once

#include <optional>
#include <string>

#include "qboundary/entanglement.hpp"
#include "qboundary/linalg.hpp"
#include "qboundary/states.hpp"

namespace qboundary {

enum class Classicality { ClassicalWrtA, Discordant, Indeterminate };

struct ClassicalityVerdict {
    Classicality status = Classicality::Indeterminate;
    std::optional<ComplexMatrix> basis;  // columns; the tested A-basis
    double residual = 0.0;               // ||D(rho) - rho||_F in that basis
    double threshold = 0.0;              // residual above this is Discordant
    std::string reason;                  // set for Indeterminate
};

struct BasisTest {
    bool classical = false;
    double residual = 0.0;
    double threshold = 0.0;
};

/// Kills the A-off-diagonal blocks in the basis given by the columns of
/// basis_a. Throws NotOrthonormal.
DensityMatrix dephase(const DensityMatrix& rho, const ComplexMatrix& basis_a, double tol = kHermitianTol);

/// classical iff ||D(rho) - rho||_F <= tol * max(1, ||rho||_F).
BasisTest is_classical_wrt_basis(const DensityMatrix& rho, const ComplexMatrix& basis_a, double tol = kHermitianTol);

/// Decides membership in C_A when rho_A is nondegenerate, using its unique
/// eigenbasis. Degenerate marginals give Indeterminate unless the candidate
/// basis certifies classicality. A residual inside the eigenvector error
/// bound is also reported as Indeterminate.
ClassicalityVerdict classify(const DensityMatrix& rho, double tol = kHermitianTol,
                             const std::optional<ComplexMatrix>& candidate = std::nullopt);

/// classify((1 - t) I/d + t rho), t in (0, 1].
ClassicalityVerdict depolarize_classify(const DensityMatrix& rho, double t, double tol = kHermitianTol);

struct EpsilonDiscordant {
    DensityMatrix state;      // (1 - eps) rho + eps rho1
    DensityMatrix rho_v;      // void part, in the form's frame
    double z = 0.0;           // 1 - d mu00
    double k = 1.0;           // 1 / ((1 - eps) z + eps)
    double eps_prime = 0.0;   // k eps
    DensityMatrix rho_hat;    // (1 - eps') rho_v + eps' rho1, in the form's frame
    ComplexMatrix frame;      // basis_a (x) I; maps frame coordinates back
    std::optional<EntanglementCertificate> certificate;  // on rho_hat; absent for eps = 0
};

/// Mixes a classical state with rho1 so the result is discordant for every
/// eps in (0, 1]. The form must have mu00 minimal and U_0 = I (BadOrdering);
/// rho1 must satisfy <00|rho1|00> = 0 and <10|rho1|01> != 0 in the frame
/// basis_a (x) standard (BadDirection).
EpsilonDiscordant epsilon_discordant(const ClassicalForm& form, const DensityMatrix& rho1, double eps,
                                     double tol = kHermitianTol);

const char* to_string(Classicality c);

}  // namespace qboundary
