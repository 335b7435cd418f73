#include "qboundary/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace qboundary {

namespace {

bool gaps_at_least(RealVector values, double min_gap) {
    std::sort(values.data(), values.data() + values.size());
    for (Eigen::Index i = 0; i + 1 < values.size(); ++i)
        if (values(i + 1) - values(i) < min_gap) return false;
    return true;
}

ComplexVector orthogonal_to(const ComplexVector& v, ComplexVector w) {
    w -= v.dot(w) * v;
    w -= v.dot(w) * v;
    return w.normalized();
}

}  // namespace

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

double Sampler::normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }

std::size_t Sampler::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

ComplexMatrix Sampler::ginibre(std::size_t rows, std::size_t cols) {
    ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index c = 0; c < g.cols(); ++c)
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            const double re = normal();
            const double im = normal();
            g(r, c) = Complex(re, im);
        }
    return g;
}

ComplexVector Sampler::unit_vector(std::size_t d) { return ComplexVector(ginibre(d, 1).col(0)).normalized(); }

ComplexMatrix Sampler::haar_unitary(std::size_t d) {
    const Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(d, d));
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (Eigen::Index i = 0; i < q.cols(); ++i) {
        const double mag = std::abs(r(i, i));
        if (mag > 0.0) q.col(i) *= r(i, i) / mag;
    }
    return q;
}

HermitianOperator Sampler::hermitian(const Dims& dims) {
    const std::size_t d = total_dim(dims);
    const ComplexMatrix g = ginibre(d, d);
    return HermitianOperator(0.5 * (g + g.adjoint()), dims);
}

DensityMatrix Sampler::density(const Dims& dims) {
    const std::size_t d = total_dim(dims);
    const ComplexMatrix g = ginibre(d, d);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix(m, dims);
}

VoidSample Sampler::separable_void(const Dims& dims) {
    require_bipartite(dims);
    const std::size_t da = dims[0];
    const std::size_t db = dims[1];
    VoidSample out;
    out.zero = ProductVector{unit_vector(da), unit_vector(db)};
    const std::size_t d = da * db;
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    double total = 0.0;
    for (std::size_t term = 0; term < 2 * d; ++term) {
        ComplexVector x = unit_vector(da);
        ComplexVector y = unit_vector(db);
        if (uniform() < 0.5)
            x = orthogonal_to(out.zero.a, x);
        else
            y = orthogonal_to(out.zero.b, y);
        const double w = uniform(0.1, 1.0);
        m += w * projector(tensor(x, y));
        total += w;
    }
    out.rho = DensityMatrix(m / total, dims);
    return out;
}

ClassicalForm Sampler::classical_form(const Dims& dims, double min_gap) {
    require_bipartite(dims);
    const auto da = static_cast<Eigen::Index>(dims[0]);
    const auto db = static_cast<Eigen::Index>(dims[1]);
    ClassicalForm form;
    form.mu.resize(da, db);
    do {
        for (Eigen::Index i = 0; i < da; ++i)
            for (Eigen::Index j = 0; j < db; ++j) form.mu(i, j) = uniform(0.02, 1.0);
        form.mu /= form.mu.sum();
    } while (!gaps_at_least(form.mu.rowwise().sum(), min_gap));
    form.basis_a = haar_unitary(dims[0]);
    for (Eigen::Index i = 0; i < da; ++i) form.unitaries_b.push_back(haar_unitary(dims[1]));
    return form;
}

ClassicalForm Sampler::normal_classical_form(const Dims& dims, double min_gap) {
    require_bipartite(dims);
    const auto da = static_cast<Eigen::Index>(dims[0]);
    const auto db = static_cast<Eigen::Index>(dims[1]);
    ClassicalForm form;
    form.mu.resize(da, db);
    do {
        for (Eigen::Index i = 0; i < da; ++i)
            for (Eigen::Index j = 0; j < db; ++j) form.mu(i, j) = uniform(0.05, 1.0);
        form.mu(0, 0) = uniform(0.0, 0.5) * form.mu.minCoeff();
        form.mu /= form.mu.sum();
    } while (!gaps_at_least(form.mu.rowwise().sum(), min_gap));
    form.basis_a = haar_unitary(dims[0]);
    form.unitaries_b.push_back(ComplexMatrix::Identity(db, db));
    for (Eigen::Index i = 1; i < da; ++i) form.unitaries_b.push_back(haar_unitary(dims[1]));
    return form;
}

DensityMatrix Sampler::near_maximally_mixed(const Dims& dims, double fraction) {
    const std::size_t d = total_dim(dims);
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix h = hermitian(dims).matrix();
    h -= (h.trace().real() / static_cast<double>(d)) * ComplexMatrix::Identity(n, n);
    const double norm1 = trace_norm(h);
    const ComplexMatrix m =
        ComplexMatrix::Identity(n, n) / static_cast<double>(d) + (fraction / static_cast<double>(d) / norm1) * h;
    return DensityMatrix(m, dims);
}

}  // namespace qboundary
