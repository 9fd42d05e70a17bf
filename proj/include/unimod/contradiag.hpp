#pragma once

#include "unimod/types.hpp"

#include <optional>
#include <vector>

namespace unimod {

/// Unitary matrix with all entries of modulus 1/√N.
class HadamardMatrix {
  public:
    explicit HadamardMatrix(CMat f);

    Eigen::Index order() const { return mat_.rows(); }
    const CMat& mat() const { return mat_; }

  private:
    CMat mat_;
};

/// Fourier matrix of order N: entries exp(2πi jk/N)/√N.
HadamardMatrix fourier_matrix(Eigen::Index n);

/// Equivalence move on complex Hadamard matrices: P1 E1 F E2 P2 with
/// diagonal phase matrices E and permutations P (0-based index maps).
HadamardMatrix enphase(const HadamardMatrix& f, const RVec& left_phases,
                       const RVec& right_phases, const std::vector<Eigen::Index>& left_perm,
                       const std::vector<Eigen::Index>& right_perm);

/// Σ_{i≠j} |G_ij|² for Hermitian G.
double offdiag_weight(const CMat& g);

struct ContradiagResult {
    CMat transformed; // A = U_max H U_max†, flat diagonal Tr H / N
    CMat u_max;
    double offdiag = 0.0; // achieved f; equals Tr H² - (Tr H)²/N
};

/// Conjugates H into the basis that maximizes the off-diagonal weight:
/// U_max = F · U_min with U_min the diagonalizing rotation of H.
ContradiagResult contradiagonalize(const CMat& h,
                                   const std::optional<HadamardMatrix>& f = std::nullopt);

/// Maximal Hilbert-Schmidt distance of the unitary orbit of a real diagonal
/// matrix to the permutation orbit of itself: 2(Tr D² - (Tr D)²/N).
double max_orbit_distance(const CMat& d);

/// diag(σ) ≺ diag(UσU†) ≺ eig(σ) for a contradiagonal state σ.
bool majorization_chain_check(const DensityMatrix& sigma, const CMat& u);

/// Unitary V with diag(V H V†) = x, for any target x majorized by the
/// spectrum of H. Built from at most N-1 planar rotations applied in the
/// eigenbasis (each one a T-transform on the active diagonal).
CMat prescribe_diagonal(const CMat& h, const RVec& x);

/// Shannon entropy of the outcome distribution diag(B ρ B†).
double measurement_entropy(const DensityMatrix& rho, const CMat& basis);

} // namespace unimod
