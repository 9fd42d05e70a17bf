#pragma once

#include "unimod/types.hpp"

#include <vector>

namespace unimod {

/// Operator Schmidt coefficients Λ of a bipartite operator, nonincreasing,
/// length N². Their sum equals the squared Hilbert-Schmidt norm of the
/// operator (N² for a unitary gate).
struct SchmidtSpectrum {
    RVec coefficients;
    double hs_norm_sq = 0.0;

    /// Normalized probability vector λ_k = Λ_k / ΣΛ.
    ProbabilitySpectrum lambda() const;
};

struct SchmidtTerm {
    double weight; // √Λ_k
    CMat factor_a; // order N, Hilbert-Schmidt orthonormal
    CMat factor_b;
};

/// Index permutation (X^R)_{<mμ>,<nν>} = X_{<mn>,<μν>}; an involution.
BipartiteOperator reshuffle(const BipartiteOperator& x);

/// Squared singular values of X^R, sorted nonincreasing.
SchmidtSpectrum schmidt_spectrum(const BipartiteOperator& u);

/// Terms (√Λ_k, B'_k, B''_k) with Σ √Λ_k B'_k ⊗ B''_k = U. Terms whose Λ
/// falls below rank_tol relative to the largest are dropped.
std::vector<SchmidtTerm> operator_schmidt_decomposition(const BipartiteOperator& u,
                                                        double rank_tol = tol::rank);

/// Rebuild Σ √Λ_k B'_k ⊗ B''_k from a term list.
CMat assemble_schmidt_terms(const std::vector<SchmidtTerm>& terms, Eigen::Index n);

/// Rényi-q entropy of the normalized Schmidt vector; q = 1 is the Schmidt
/// strength S(U).
double gate_entanglement_entropy(const BipartiteOperator& u, double q = 1.0);

/// Fourier gate of order L = N²: F_kl = exp(2πi kl / L) / √L.
BipartiteOperator fourier_gate(Eigen::Index order);

} // namespace unimod
