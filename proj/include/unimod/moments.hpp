#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace unimod {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// One row of an analytic-vs-Monte-Carlo moment table.
struct MomentReport {
    std::int64_t order = 0;
    std::int64_t dimension = 0;
    BigRat analytic;
    double mc_estimate = 0.0;
    double standard_error = 0.0;
    std::int64_t samples = 0;

    void validate() const;
};

// --- exact combinatorics -------------------------------------------------

BigInt binomial(std::int64_t n, std::int64_t k);

/// C_k = binom(2k, k) / (k + 1).
BigInt catalan_number(std::int64_t k);

/// Triangle with recursion C_{n,k} = C_{n-1,k} + C_{n,k-1}, C_{n,0} = 1;
/// closed form (n+k)!(n-k+1) / (k!(n+1)!).
BigInt catalan_triangle(std::int64_t n, std::int64_t k);

/// f_{n,k} = Σ_s binom(s,k) C_{n,s}; equivalently
/// binom(2n+2, n-k) binom(n+k, k) / (n+1). Both routes are evaluated and
/// must agree.
BigInt borel_triangle(std::int64_t n, std::int64_t k);

// --- moments of the squared-singular-value densities ----------------------

/// Conjectured exact ⟨Tr ρⁿ⟩ for states ρ = AA†/N² built from the
/// unimodular ensemble: N^{-2(n-1)} Σ_k (-1)^k f_{n-1,k} N^{n-k-1}.
/// Proven for n ≤ 4; numerically verified beyond.
BigRat ue_moment(std::int64_t n, std::int64_t dim);

/// Scaled integer polynomial P_n(N) = N^{2(n-1)} ⟨Tr ρⁿ⟩.
BigInt ue_moment_scaled_poly(std::int64_t n, std::int64_t dim);

/// ⟨Tr ρⁿ⟩ for the Hilbert-Schmidt ensemble; only n = 2, 3 are known.
BigRat hs_moment(std::int64_t n, std::int64_t dim);

/// Continuation of the unimodular moments to real powers x > 0:
/// N^{1-x} Γ(2x+1)/(Γ(x+1)Γ(x+2)) ₂F₁(x, 1-x; 2+x; 1/N), the
/// hypergeometric summed as a power series in 1/N.
double ue_moment_continued(double x, std::int64_t dim);

/// Exact mean von Neumann entropy of the unimodular ensemble:
/// ln N - (N-1) - (N-1)² ln((N-1)/N).
double ue_mean_entropy(std::int64_t dim);

/// Page-type mean entropy for the Hilbert-Schmidt ensemble:
/// Σ_{k=N+1}^{N²} 1/k - (N-1)/(2N).
double hs_mean_entropy(std::int64_t dim);

/// First five cumulants κ₁..κ₅ of the scaled eigenvalue x = Nλ.
std::array<BigRat, 5> ue_cumulants(std::int64_t dim);

/// Cumulants from raw moments via κ_n = m_n - Σ binom(n-1,k-1) κ_k m_{n-k}.
std::vector<BigRat> cumulants_from_moments(const std::vector<BigRat>& raw_moments);

/// Asymptotic Schmidt-strength constant for Haar gates: 2 ln N - 1/2.
double haar_gate_entropy_reference(std::int64_t dim);

// --- limiting densities ----------------------------------------------------

/// Marchenko-Pastur density (1/π)√(1/x - 1/4) on (0, 4].
double mp_density(double x);

/// n-th Marchenko-Pastur moment: the Catalan number C_n.
BigInt mp_moment(std::int64_t n);

/// Arcsine density 1/(π√(x(2-x))) on (0, 2).
double arcsine_density(double x);

/// n-th arcsine moment: binom(2n, n) / 2ⁿ.
BigRat arcsine_moment(std::int64_t n);

/// ∫ f(x) P_MP(x) dx via the substitution x = 4 sin²θ.
double integrate_mp(const std::function<double(double)>& f, double rel_tol = 1e-10);

/// ∫ f(x) P_As(x) dx via the substitution x = 2 sin²θ.
double integrate_arcsine(const std::function<double(double)>& f, double rel_tol = 1e-10);

/// Adaptive Simpson quadrature on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

// --- word-count oracle -------------------------------------------------------

/// Number of N-alphabet words of length 2n that start with the first letter
/// and are generated by repeatedly inserting doublets into the empty word.
/// Brute-force enumeration; conjectured equal to ue_moment_scaled_poly(n, N).
std::int64_t count_doublet_words(std::int64_t alphabet, std::int64_t insertions);

} // namespace unimod
