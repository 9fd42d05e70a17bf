#pragma once

#include "unimod/types.hpp"

namespace unimod {

/// Singular values of a square complex matrix, sorted nonincreasing.
RVec singular_values(const CMat& a);

struct HermitianEig {
    RVec values; // nonincreasing
    CMat vectors; // columns match values; h = vectors * diag(values) * vectors†
};

HermitianEig eig_hermitian(const CMat& h);

/// x ≺ y: after sorting both nonincreasing, every partial sum of x is
/// bounded by the one of y and the totals agree within eps.
bool majorizes(const RVec& y, const RVec& x, double eps = 1e-10);

/// -Σ p ln p in nats, with 0 ln 0 = 0.
double shannon_entropy(const ProbabilitySpectrum& p);

/// Rényi entropy of order q ≥ 0 in nats. q = 1 falls back to Shannon,
/// q = 0 is the Hartley entropy ln K with K the number of entries above
/// the rank tolerance.
double renyi_entropy(const ProbabilitySpectrum& p, double q);

namespace detail {
/// Entropy of a raw nonnegative weight vector (already normalized);
/// skips ProbabilitySpectrum validation for hot Monte Carlo loops.
double entropy_of(const RVec& w);
} // namespace detail

} // namespace unimod
