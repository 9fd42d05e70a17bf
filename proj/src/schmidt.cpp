#include "unimod/schmidt.hpp"

#include "unimod/linalg.hpp"

#include <cmath>
#include <numbers>

namespace unimod {

ProbabilitySpectrum SchmidtSpectrum::lambda() const {
    return ProbabilitySpectrum::normalized(coefficients);
}

BipartiteOperator reshuffle(const BipartiteOperator& x) {
    const Eigen::Index n = x.dim_a();
    if (x.dim_b() != n)
        throw std::invalid_argument("reshuffle: factor dims must be equal");
    const CMat& m = x.mat();
    CMat r(n * n, n * n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index mu = 0; mu < n; ++mu)
            for (Eigen::Index b = 0; b < n; ++b)
                for (Eigen::Index nu = 0; nu < n; ++nu)
                    r(a * n + mu, b * n + nu) = m(a * n + b, mu * n + nu);
    return BipartiteOperator(std::move(r), n, n);
}

SchmidtSpectrum schmidt_spectrum(const BipartiteOperator& u) {
    const BipartiteOperator r = reshuffle(u);
    const RVec sv = singular_values(r.mat());
    SchmidtSpectrum out;
    out.coefficients = sv.array().square();
    out.hs_norm_sq = u.mat().squaredNorm();
    if (std::abs(out.coefficients.sum() - out.hs_norm_sq) >
        1e-9 * std::max(1.0, out.hs_norm_sq))
        throw std::runtime_error("schmidt_spectrum: coefficient sum drifted from ||U||^2_HS");
    return out;
}

std::vector<SchmidtTerm> operator_schmidt_decomposition(const BipartiteOperator& u,
                                                        double rank_tol) {
    if (!(rank_tol > 0.0))
        throw std::invalid_argument("operator_schmidt_decomposition: rank_tol must be positive");
    const Eigen::Index n = u.dim_a();
    if (u.dim_b() != n)
        throw std::invalid_argument("operator_schmidt_decomposition: factor dims must be equal");
    const BipartiteOperator r = reshuffle(u);
    Eigen::JacobiSVD<CMat> svd(r.mat(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RVec& sv = svd.singularValues();
    const double cutoff_sq = rank_tol * (sv.size() > 0 ? sv[0] * sv[0] : 0.0);

    std::vector<SchmidtTerm> terms;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv[k] * sv[k] <= cutoff_sq) break;
        SchmidtTerm t;
        t.weight = sv[k];
        t.factor_a = Eigen::Map<const CMat>(svd.matrixU().col(k).data(), n, n).transpose();
        t.factor_b = Eigen::Map<const CMat>(svd.matrixV().col(k).data(), n, n).transpose().conjugate();
        terms.push_back(std::move(t));
    }
    return terms;
}

CMat assemble_schmidt_terms(const std::vector<SchmidtTerm>& terms, Eigen::Index n) {
    CMat u = CMat::Zero(n * n, n * n);
    for (const auto& t : terms)
        for (Eigen::Index m = 0; m < n; ++m)
            for (Eigen::Index mu = 0; mu < n; ++mu)
                u.block(m * n, mu * n, n, n) += t.weight * t.factor_a(m, mu) * t.factor_b;
    return u;
}

double gate_entanglement_entropy(const BipartiteOperator& u, double q) {
    const SchmidtSpectrum s = schmidt_spectrum(u);
    return renyi_entropy(s.lambda(), q);
}

BipartiteOperator fourier_gate(Eigen::Index order) {
    if (order < 1)
        throw std::invalid_argument("fourier_gate: order must be positive");
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(order))));
    if (n * n != order)
        throw std::invalid_argument("fourier_gate: order must be a perfect square");
    CMat f(order, order);
    const double scale = 1.0 / std::sqrt(static_cast<double>(order));
    for (Eigen::Index k = 0; k < order; ++k)
        for (Eigen::Index l = 0; l < order; ++l) {
            // Reduce k*l mod L before multiplying by 2π/L to keep phases accurate.
            const auto kl = static_cast<double>((k * l) % order);
            const double t = 2.0 * std::numbers::pi * kl / static_cast<double>(order);
            f(k, l) = scale * Complex(std::cos(t), std::sin(t));
        }
    return BipartiteOperator(std::move(f), n, n);
}

} // namespace unimod
