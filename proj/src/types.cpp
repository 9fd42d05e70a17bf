#include "unimod/types.hpp"

#include <algorithm>
#include <cmath>

namespace unimod {

bool all_finite(const CMat& m) {
    return m.allFinite();
}

bool is_hermitian(const CMat& m, double eps) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff(
               ) <= eps;
}

bool is_unitary(const CMat& m, double eps) {
    if (m.rows() != m.cols()) return false;
    CMat g = m.adjoint() * m;
    g -= CMat::Identity(m.rows(), m.cols());
    return g.cwiseAbs().maxCoeff() <= eps;
}

ProbabilitySpectrum::ProbabilitySpectrum(RVec values) : values_(std::move(values)) {
    if (values_.size() == 0)
        throw std::invalid_argument("ProbabilitySpectrum: empty vector");
    double sum = 0.0;
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
        double v = values_[k];
        if (!std::isfinite(v) || v < -tol::positivity)
            throw std::invalid_argument("ProbabilitySpectrum: entry " + std::to_string(k) +
                                        " is negative beyond tolerance");
        if (v < 0.0) values_[k] = 0.0;
        sum += values_[k];
    }
    if (std::abs(sum - 1.0) > tol::trace)
        throw std::invalid_argument("ProbabilitySpectrum: sum " + std::to_string(sum) +
                                    " deviates from 1");
    std::sort(values_.begin(), values_.end(), std::greater<double>());
}

ProbabilitySpectrum ProbabilitySpectrum::normalized(RVec values) {
    double sum = values.sum();
    if (!(sum > 0.0) || !std::isfinite(sum))
        throw std::invalid_argument("ProbabilitySpectrum: nonpositive total weight");
    values /= sum;
    return ProbabilitySpectrum(std::move(values));
}

DensityMatrix::DensityMatrix(CMat rho) : mat_(std::move(rho)) {
    if (mat_.rows() == 0 || mat_.rows() != mat_.cols())
        throw std::invalid_argument("DensityMatrix: matrix must be square and nonempty");
    if (!all_finite(mat_))
        throw std::invalid_argument("DensityMatrix: non-finite entries");
    if (!is_hermitian(mat_))
        throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-10");
    if (std::abs(mat_.trace().real() - 1.0) > tol::trace || std::abs(mat_.trace().imag()) > tol::trace)
        throw std::invalid_argument("DensityMatrix: trace deviates from 1");
}

ProbabilitySpectrum DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<CMat> es(mat_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("DensityMatrix: eigenvalue computation failed");
    RVec v = es.eigenvalues();
    if (v.minCoeff() < -tol::positivity)
        throw std::invalid_argument("DensityMatrix: spectrum below -1e-10, not a state");
    return ProbabilitySpectrum(std::move(v));
}

BipartiteOperator::BipartiteOperator(CMat mat, Eigen::Index dim_a, Eigen::Index dim_b)
    : mat_(std::move(mat)), dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a_ < 1 || dim_b_ < 1)
        throw std::invalid_argument("BipartiteOperator: factor dimensions must be positive");
    if (mat_.rows() != mat_.cols() || mat_.rows() != dim_a_ * dim_b_)
        throw std::invalid_argument("BipartiteOperator: order must equal dim_a * dim_b");
    if (!all_finite(mat_))
        throw std::invalid_argument("BipartiteOperator: non-finite entries");
}

} // namespace unimod
