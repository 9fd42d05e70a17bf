#include "unimod/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace unimod {

RVec singular_values(const CMat& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("singular_values: matrix must be square");
    if (!all_finite(a))
        throw std::invalid_argument("singular_values: non-finite entries");
    Eigen::JacobiSVD<CMat> svd(a);
    return svd.singularValues(); // Eigen returns them nonincreasing
}

HermitianEig eig_hermitian(const CMat& h) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("eig_hermitian: matrix must be square");
    if (!all_finite(h))
        throw std::invalid_argument("eig_hermitian: non-finite entries");
    if (!is_hermitian(h))
        throw std::invalid_argument("eig_hermitian: not Hermitian within 1e-10");
    Eigen::SelfAdjointEigenSolver<CMat> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eig_hermitian: solver failed");
    // Eigen sorts ascending; flip to nonincreasing.
    HermitianEig out;
    out.values = es.eigenvalues().reverse();
    out.vectors = es.eigenvectors().rowwise().reverse();
    return out;
}

bool majorizes(const RVec& y, const RVec& x, double eps) {
    if (y.size() != x.size())
        throw std::invalid_argument("majorizes: length mismatch");
    RVec ys = y, xs = x;
    std::sort(ys.begin(), ys.end(), std::greater<double>());
    std::sort(xs.begin(), xs.end(), std::greater<double>());
    double sy = 0.0, sx = 0.0;
    for (Eigen::Index m = 0; m + 1 < ys.size(); ++m) {
        sy += ys[m];
        sx += xs[m];
        if (sx > sy + eps) return false;
    }
    return std::abs((sx + xs[xs.size() - 1]) - (sy + ys[ys.size() - 1])) <= eps;
}

double shannon_entropy(const ProbabilitySpectrum& p) {
    return detail::entropy_of(p.values());
}

double renyi_entropy(const ProbabilitySpectrum& p, double q) {
    if (q < 0.0 || !std::isfinite(q))
        throw std::invalid_argument("renyi_entropy: order q must be nonnegative");
    if (q == 1.0) return shannon_entropy(p);
    if (q == 0.0) {
        Eigen::Index count = 0;
        for (Eigen::Index k = 0; k < p.size(); ++k)
            if (p[k] > tol::rank) ++count;
        return std::log(static_cast<double>(count));
    }
    double s = 0.0;
    for (Eigen::Index k = 0; k < p.size(); ++k)
        if (p[k] > 0.0) s += std::pow(p[k], q);
    return std::log(s) / (1.0 - q);
}

namespace detail {

double entropy_of(const RVec& w) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        double v = w[k];
        if (v > 0.0) s -= v * std::log(v);
    }
    return s;
}

} // namespace detail

} // namespace unimod
