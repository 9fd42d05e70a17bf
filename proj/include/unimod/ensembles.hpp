#pragma once

#include "unimod/random.hpp"
#include "unimod/types.hpp"

#include <cstdint>
#include <string>

namespace unimod {

enum class EnsembleKind {
    unimodular,
    ginibre,
    hilbert_schmidt_state,
    diagonal_gate,
    haar_pure_state,
};

EnsembleKind ensemble_kind_from_string(const std::string& name);
std::string to_string(EnsembleKind kind);

/// Reproducibility contract for every Monte Carlo run: sample i is drawn
/// from RandomStream(seed, i), so runs are independent of scheduling.
struct EnsembleConfig {
    EnsembleKind kind = EnsembleKind::unimodular;
    Eigen::Index dimension = 2;
    std::int64_t samples = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

/// N×N matrix with every entry exp(iφ), phases i.i.d. uniform on [0, 2π).
CMat sample_unimodular(Eigen::Index n, RandomStream& stream);

/// ρ = AA†/N² for unimodular A; the diagonal is flat at 1/N by construction.
DensityMatrix unimodular_to_state(const CMat& a);

/// Entries i.i.d. complex normal with E|G_jk|² = 1.
CMat sample_ginibre(Eigen::Index n, RandomStream& stream);

/// ρ = GG†/Tr GG† with G Ginibre: Hilbert-Schmidt-distributed mixed state.
DensityMatrix sample_hs_state(Eigen::Index n, RandomStream& stream);

/// Diagonal unitary gate of order N² on an N×N bipartite system.
BipartiteOperator sample_diagonal_gate(Eigen::Index n, RandomStream& stream);

/// Reshapes the diagonal of a diagonal gate row-major into an N×N matrix:
/// A_jk = U_νν with ν = jN + k.
CMat diagonal_gate_to_unimodular(const BipartiteOperator& u);

/// Haar-random unit vector of length N.
CVec sample_haar_state(Eigen::Index n, RandomStream& stream);

/// Haar-random unitary of order N (QR of a Ginibre sample with the phase
/// convention fixed).
CMat sample_haar_unitary(Eigen::Index n, RandomStream& stream);

} // namespace unimod
