#pragma once

#include <cstddef>

#include "qboundary/linalg.hpp"

namespace qboundary {

/// The affine line rho_t = (1 - t) rho0 + t rho1 through two states.
struct StateLine {
    DensityMatrix rho0;
    DensityMatrix rho1;
};

/// Last point of the line (going towards negative t) that is still a state.
struct BoundaryPoint {
    double t_b = 0.0;
    DensityMatrix state;
    std::size_t void_degree = 0;
    double min_eigenvalue = 0.0;
};

inline constexpr double kBoundaryTol = 1e-12;
inline constexpr double kBoundarySearchFloor = -1e6;

/// Always Hermitian with unit trace; positive exactly on the physical
/// segment of the line.
HermitianOperator line_state(const StateLine& line, double t);

/// lambda_min(rho_t), diagonal fast path when both endpoints are diagonal.
double line_min_eigenvalue(const StateLine& line, double t);

/// Rounding-level slack below zero that still counts as positive on the
/// line at parameter t.
double line_psd_slack(const StateLine& line, double t);

/// Bisection on the sign of lambda_min(rho_t) over [floor, 0]. Throws
/// DegenerateLine when rho0 == rho1, ImmediateBoundary when no t < 0 keeps
/// rho_t positive, Unbounded when the floor is still positive.
BoundaryPoint find_boundary(const StateLine& line, double tol_t = kBoundaryTol);

/// Number of eigenvalues with |lambda| <= zero_tol * max(1, ||H||_F).
/// Throws NotPSD when H is not positive within psd_tol.
std::size_t void_degree(const HermitianOperator& h, double psd_tol = kPsdTol,
                        double zero_tol = kZeroEigenvalueTol);

/// tau = (1 - eps) rho_b + eps rho, eps in [0, 1].
DensityMatrix epsilon_mix(const DensityMatrix& rho_b, const DensityMatrix& rho, double eps);

}  // namespace qboundary
