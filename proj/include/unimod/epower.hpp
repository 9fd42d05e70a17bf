#pragma once

#include "unimod/random.hpp"
#include "unimod/types.hpp"

#include <cstdint>

namespace unimod {

struct EpowerReport {
    double estimate = 0.0; // mean linear entropy over product states
    double stderr_ = 0.0;
    double analytic = 0.0; // closed-form reference where one exists, else NaN
    std::int64_t samples = 0;
};

/// Linear entropy E = 1 - Tr μ² of a bipartite pure state with equal factor
/// dimensions; Tr μ² is computed from the Schmidt values of the reshaped
/// amplitude matrix.
double linear_entanglement(const CVec& psi);

inline constexpr std::int64_t kDefaultEpowerSamples = 100000;

/// Monte Carlo entangling power: mean linear entropy of U(ψ₁⊗ψ₂) over
/// independent Haar product states. kDefaultEpowerSamples is the sample
/// count to reach for when the caller has no budget of its own.
EpowerReport entangling_power_mc(const BipartiteOperator& u, std::int64_t samples,
                                 RandomStream& stream);

/// Product-state-averaged purity ⟨Tr μ²⟩ of a fixed diagonal gate:
/// (N² + 2N³ + N⁴ Tr ρ²) / (N²(N+1)²) with ρ from the reshaped diagonal.
double diag_gate_avg_purity(const BipartiteOperator& u);

/// Phase-averaged entangling power of diagonal gates: ((N-1)/(N+1))².
double mean_epower_diag(std::int64_t dim);

/// Mean entangling power of Haar-random gates: (N-1)²/(N²+1).
double mean_epower_haar(std::int64_t dim);

} // namespace unimod
