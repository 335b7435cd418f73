#include "qboundary/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qboundary {

namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
// Bisection stops refining below this width.
constexpr double kMinResolvableT = 1e-15;
// When rho0 is itself singular, the rounding slack of the positivity test can
// place hi a few ulps below 0; such boundaries are reported as immediate.
constexpr double kImmediateBoundaryT = 1e-13;

bool both_diagonal(const StateLine& line) { return line.rho0.op().is_diagonal() && line.rho1.op().is_diagonal(); }

void require_same_shape(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim() || a.dims() != b.dims())
        throw Error(ErrorCode::DimMismatch, "states live on different spaces");
}

// Positivity test along the line with the diagonal structure and the norms
// worked out once, so bisection on large diagonal lines stays O(d) per step.
class LineProbe {
public:
    explicit LineProbe(const StateLine& line) : line_(line), diagonal_(both_diagonal(line)) {
        if (diagonal_) {
            d0_ = line.rho0.matrix().diagonal().real();
            d1_ = line.rho1.matrix().diagonal().real();
            a_ = d0_.cwiseAbs().maxCoeff();
            b_ = d1_.cwiseAbs().maxCoeff();
        } else {
            a_ = line.rho0.op().frobenius_norm();
            b_ = line.rho1.op().frobenius_norm();
        }
    }

    double min_eigenvalue(double t) const {
        if (diagonal_) return ((1.0 - t) * d0_ + t * d1_).minCoeff();
        return qboundary::min_eigenvalue(line_state(line_, t));
    }

    double slack(double t) const {
        if (diagonal_) return 4.0 * kEpsilon * (std::abs(1.0 - t) * a_ + std::abs(t) * b_);
        const double scale = std::abs(1.0 - t) * a_ + std::abs(t) * b_;
        return 32.0 * kEpsilon * std::sqrt(static_cast<double>(line_.rho0.dim())) * std::max(1.0, scale);
    }

    bool positive(double t) const { return min_eigenvalue(t) >= -slack(t); }

private:
    const StateLine& line_;
    bool diagonal_;
    RealVector d0_;
    RealVector d1_;
    double a_ = 0.0;
    double b_ = 0.0;
};

}  // namespace

HermitianOperator line_state(const StateLine& line, double t) {
    require_same_shape(line.rho0, line.rho1);
    return HermitianOperator((1.0 - t) * line.rho0.matrix() + t * line.rho1.matrix(), line.rho0.dims());
}

double line_min_eigenvalue(const StateLine& line, double t) { return LineProbe(line).min_eigenvalue(t); }

double line_psd_slack(const StateLine& line, double t) { return LineProbe(line).slack(t); }

BoundaryPoint find_boundary(const StateLine& line, double tol_t) {
    require_same_shape(line.rho0, line.rho1);
    if ((line.rho0.matrix() - line.rho1.matrix()).norm() <= kHermitianTol)
        throw Error(ErrorCode::DegenerateLine, "rho0 == rho1 spans no line");
    if (!(tol_t > 0.0)) throw Error(ErrorCode::OutOfRange, "tol_t must be positive");

    const LineProbe probe(line);
    const auto positive = [&](double t) { return probe.positive(t); };

    if (positive(kBoundarySearchFloor)) {
        std::ostringstream os;
        os << "rho_t is still a state at t = " << kBoundarySearchFloor;
        throw Error(ErrorCode::Unbounded, os.str());
    }

    double lo = kBoundarySearchFloor;  // not positive
    double hi = 0.0;                   // positive
    for (int iter = 0; iter < 4096; ++iter) {
        const double width = hi - lo;
        const double target = std::max({tol_t * std::min(1.0, std::abs(hi)), kMinResolvableT, 4.0 * kEpsilon * std::abs(lo)});
        if (width <= target) break;
        const double mid = lo + 0.5 * width;
        if (mid == lo || mid == hi) break;
        (positive(mid) ? hi : lo) = mid;
    }

    if (std::abs(hi) <= kImmediateBoundaryT && probe.min_eigenvalue(0.0) <= probe.slack(0.0))
        throw Error(ErrorCode::ImmediateBoundary, "rho_t leaves the state space as soon as t < 0");

    BoundaryPoint out;
    out.t_b = hi;
    const HermitianOperator at_boundary = line_state(line, hi);
    out.state = DensityMatrix(at_boundary);
    out.min_eigenvalue = probe.min_eigenvalue(hi);
    out.void_degree = void_degree(at_boundary);
    return out;
}

std::size_t void_degree(const HermitianOperator& h, double psd_tol, double zero_tol) {
    const RealVector values = hermitian_eigenvalues(h);
    const double scale = std::max(1.0, h.frobenius_norm());
    if (values(values.size() - 1) < -psd_tol * scale)
        throw Error(ErrorCode::NotPSD, "void degree is defined for positive operators");
    std::size_t zeros = 0;
    for (double v : values)
        if (std::abs(v) <= zero_tol * scale) ++zeros;
    return zeros;
}

DensityMatrix epsilon_mix(const DensityMatrix& rho_b, const DensityMatrix& rho, double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw Error(ErrorCode::OutOfRange, "eps outside [0, 1]");
    require_same_shape(rho_b, rho);
    if (eps == 0.0) return rho_b;
    if (eps == 1.0) return rho;
    return DensityMatrix((1.0 - eps) * rho_b.matrix() + eps * rho.matrix(), rho_b.dims());
}

}  // namespace qboundary
