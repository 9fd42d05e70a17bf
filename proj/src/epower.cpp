#include "unimod/epower.hpp"

#include "unimod/ensembles.hpp"
#include "unimod/linalg.hpp"

#include <cmath>
#include <limits>

namespace unimod {

double linear_entanglement(const CVec& psi) {
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(psi.size()))));
    if (n * n != psi.size())
        throw std::invalid_argument("linear_entanglement: length must be a perfect square");
    if (std::abs(psi.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("linear_entanglement: state must be normalized");
    // ψ_{<mn>} reshaped to an amplitude matrix; Tr μ² = Σ s_k⁴ where s are
    // its singular values (orientation is irrelevant for them).
    const Eigen::Map<const CMat> c(psi.data(), n, n);
    const RVec s = singular_values(c);
    return 1.0 - s.array().square().square().sum();
}

EpowerReport entangling_power_mc(const BipartiteOperator& u, std::int64_t samples,
                                 RandomStream& stream) {
    if (samples < 1)
        throw std::invalid_argument("entangling_power_mc: samples must be >= 1");
    const Eigen::Index n = u.dim_a();
    if (u.dim_b() != n)
        throw std::invalid_argument("entangling_power_mc: factor dims must be equal");
    if (!is_unitary(u.mat(), 1e-10))
        throw std::invalid_argument("entangling_power_mc: gate is not unitary");

    double sum = 0.0, sum_sq = 0.0;
    CVec product(n * n);
    for (std::int64_t i = 0; i < samples; ++i) {
        const CVec psi1 = sample_haar_state(n, stream);
        const CVec psi2 = sample_haar_state(n, stream);
        for (Eigen::Index a = 0; a < n; ++a) product.segment(a * n, n) = psi1[a] * psi2;
        const double e = linear_entanglement(u.mat() * product);
        sum += e;
        sum_sq += e * e;
    }
    EpowerReport report;
    report.samples = samples;
    report.estimate = sum / static_cast<double>(samples);
    const double var =
        std::max(0.0, sum_sq / static_cast<double>(samples) - report.estimate * report.estimate);
    report.stderr_ = samples > 1 ? std::sqrt(var / static_cast<double>(samples - 1)) : 0.0;
    report.analytic = std::numeric_limits<double>::quiet_NaN();
    // Diagonal gates have a closed-form product-state average.
    bool diagonal = true;
    for (Eigen::Index r = 0; r < u.order() && diagonal; ++r)
        for (Eigen::Index c = 0; c < u.order(); ++c)
            if (r != c && std::abs(u.mat()(r, c)) > 1e-14) {
                diagonal = false;
                break;
            }
    if (diagonal) report.analytic = 1.0 - diag_gate_avg_purity(u);
    return report;
}

double diag_gate_avg_purity(const BipartiteOperator& u) {
    const CMat a = diagonal_gate_to_unimodular(u); // validates diagonality
    const double n = static_cast<double>(u.dim_a());
    const double n2 = n * n;
    const double purity = (a * a.adjoint()).squaredNorm() / (n2 * n2); // Tr ρ²
    return (n2 + 2.0 * n2 * n + n2 * n2 * purity) / (n2 * (n + 1.0) * (n + 1.0));
}

double mean_epower_diag(std::int64_t dim) {
    if (dim < 1) throw std::invalid_argument("mean_epower_diag: N must be >= 1");
    const double n = static_cast<double>(dim);
    const double r = (n - 1.0) / (n + 1.0);
    return r * r;
}

double mean_epower_haar(std::int64_t dim) {
    if (dim < 1) throw std::invalid_argument("mean_epower_haar: N must be >= 1");
    const double n = static_cast<double>(dim);
    return (n - 1.0) * (n - 1.0) / (n * n + 1.0);
}

} // namespace unimod
