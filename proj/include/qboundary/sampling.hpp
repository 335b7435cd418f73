#pragma once

#include <cstdint>
#include <random>

#include "qboundary/entanglement.hpp"
#include "qboundary/linalg.hpp"
#include "qboundary/states.hpp"

namespace qboundary {

struct VoidSample {
    DensityMatrix rho;          // separable, annihilates zero.full()
    ProductVector zero;
};

/// Seeded generator for the property suites. Every draw is a deterministic
/// function of the seed and the call sequence.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0);
    double normal();
    std::size_t index(std::size_t n);

    /// Matrix of i.i.d. standard complex Gaussians.
    ComplexMatrix ginibre(std::size_t rows, std::size_t cols);
    ComplexVector unit_vector(std::size_t d);

    /// Haar unitary via QR of a Ginibre matrix with the R-diagonal phases
    /// moved into Q.
    ComplexMatrix haar_unitary(std::size_t d);

    /// (G + G^dag)/2, a GUE-like Hermitian matrix.
    HermitianOperator hermitian(const Dims& dims);

    /// G G^dag / Tr, full rank with probability one.
    DensityMatrix density(const Dims& dims);

    /// Mixture of product states each orthogonal to a random product vector
    /// |a>|b>, so the result is separable and has |a>|b> in its kernel.
    VoidSample separable_void(const Dims& dims);

    /// Classical form with Haar bases and weights whose A-marginal has all
    /// pairwise gaps >= min_gap.
    ClassicalForm classical_form(const Dims& dims, double min_gap);

    /// Classical form ready for the eps-discordant construction: mu00 is the
    /// strict minimum, U_0 = I and the A-marginal gaps are >= min_gap.
    ClassicalForm normal_classical_form(const Dims& dims, double min_gap);

    /// State with Tr|rho - I/d| = fraction / d, fraction in (0, 1).
    DensityMatrix near_maximally_mixed(const Dims& dims, double fraction);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace qboundary
