#include "unimod/ensembles.hpp"

#include <cmath>
#include <complex>

namespace unimod {

EnsembleKind ensemble_kind_from_string(const std::string& name) {
    if (name == "unimodular") return EnsembleKind::unimodular;
    if (name == "ginibre") return EnsembleKind::ginibre;
    if (name == "hilbert_schmidt_state") return EnsembleKind::hilbert_schmidt_state;
    if (name == "diagonal_gate") return EnsembleKind::diagonal_gate;
    if (name == "haar_pure_state") return EnsembleKind::haar_pure_state;
    throw std::invalid_argument("unknown ensemble kind: " + name);
}

std::string to_string(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::unimodular: return "unimodular";
        case EnsembleKind::ginibre: return "ginibre";
        case EnsembleKind::hilbert_schmidt_state: return "hilbert_schmidt_state";
        case EnsembleKind::diagonal_gate: return "diagonal_gate";
        case EnsembleKind::haar_pure_state: return "haar_pure_state";
    }
    throw std::logic_error("unreachable");
}

void EnsembleConfig::validate() const {
    if (dimension < 1)
        throw std::invalid_argument("EnsembleConfig: dimension must be >= 1");
    if (samples < 1)
        throw std::invalid_argument("EnsembleConfig: samples must be >= 1");
}

namespace {

void require_positive(Eigen::Index n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": dimension must be >= 1");
}

} // namespace

CMat sample_unimodular(Eigen::Index n, RandomStream& stream) {
    require_positive(n, "sample_unimodular");
    CMat a(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) {
            const double phi = stream.phase();
            a(j, k) = Complex(std::cos(phi), std::sin(phi));
        }
    return a;
}

DensityMatrix unimodular_to_state(const CMat& a) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw std::invalid_argument("unimodular_to_state: matrix must be square");
    const double n2 = static_cast<double>(a.rows()) * static_cast<double>(a.rows());
    if (((a.cwiseAbs().array() - 1.0).abs() > 1e-12).any())
        throw std::invalid_argument("unimodular_to_state: entries must have unit modulus");
    CMat rho = (a * a.adjoint()) / n2;
    // Rows of A have squared norm N exactly, so diag(ρ) = 1/N up to rounding.
    rho.diagonal().setConstant(Complex(1.0 / static_cast<double>(a.rows()), 0.0));
    return DensityMatrix(std::move(rho));
}

CMat sample_ginibre(Eigen::Index n, RandomStream& stream) {
    require_positive(n, "sample_ginibre");
    CMat g(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) g(j, k) = stream.complex_normal();
    return g;
}

DensityMatrix sample_hs_state(Eigen::Index n, RandomStream& stream) {
    require_positive(n, "sample_hs_state");
    const CMat g = sample_ginibre(n, stream);
    CMat w = g * g.adjoint();
    w /= w.trace().real();
    w = (w + w.adjoint()) / 2.0;
    return DensityMatrix(std::move(w));
}

BipartiteOperator sample_diagonal_gate(Eigen::Index n, RandomStream& stream) {
    require_positive(n, "sample_diagonal_gate");
    CMat u = CMat::Zero(n * n, n * n);
    for (Eigen::Index v = 0; v < n * n; ++v) {
        const double phi = stream.phase();
        u(v, v) = Complex(std::cos(phi), std::sin(phi));
    }
    return BipartiteOperator(std::move(u), n, n);
}

CMat diagonal_gate_to_unimodular(const BipartiteOperator& u) {
    const Eigen::Index n = u.dim_a();
    if (u.dim_b() != n)
        throw std::invalid_argument("diagonal_gate_to_unimodular: factor dims must be equal");
    const CMat& m = u.mat();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            if (r != c && std::abs(m(r, c)) > 1e-14)
                throw std::invalid_argument("diagonal_gate_to_unimodular: gate is not diagonal");
    CMat a(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) a(j, k) = m(j * n + k, j * n + k);
    return a;
}

CVec sample_haar_state(Eigen::Index n, RandomStream& stream) {
    require_positive(n, "sample_haar_state");
    CVec psi(n);
    for (Eigen::Index k = 0; k < n; ++k) psi[k] = stream.complex_normal();
    const double norm = psi.norm();
    if (norm == 0.0) return sample_haar_state(n, stream);
    return psi / norm;
}

CMat sample_haar_unitary(Eigen::Index n, RandomStream& stream) {
    require_positive(n, "sample_haar_unitary");
    const CMat g = sample_ginibre(n, stream);
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is exactly Haar.
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex d = r(k, k);
        q.col(k) *= (d == Complex(0.0) ? Complex(1.0) : d / std::abs(d));
    }
    return q;
}

} // namespace unimod
