#include "unimod/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace unimod {

void MomentReport::validate() const {
    if (order < 1 || dimension < 1 || samples < 1)
        throw std::invalid_argument("MomentReport: order, dimension and samples must be >= 1");
    if (samples > 1 && !(standard_error > 0.0))
        throw std::invalid_argument("MomentReport: standard error must be positive");
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

BigInt catalan_number(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("catalan_number: k must be nonnegative");
    return binomial(2 * k, k) / (k + 1);
}

BigInt catalan_triangle(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("catalan_triangle: need 0 <= k <= n");
    // (n+k)!(n-k+1) / (k!(n+1)!) = binom(n+k, k) * (n-k+1) / (n+1)
    return binomial(n + k, k) * (n - k + 1) / (n + 1);
}

BigInt borel_triangle(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("borel_triangle: need 0 <= k <= n");
    BigInt by_sum = 0;
    for (std::int64_t s = k; s <= n; ++s) by_sum += binomial(s, k) * catalan_triangle(n, s);
    const BigInt closed = binomial(2 * n + 2, n - k) * binomial(n + k, k) / (n + 1);
    if (by_sum != closed)
        throw std::logic_error("borel_triangle: summation and closed forms disagree at n=" +
                               std::to_string(n) + " k=" + std::to_string(k));
    return closed;
}

BigInt ue_moment_scaled_poly(std::int64_t n, std::int64_t dim) {
    if (n < 1 || dim < 1)
        throw std::invalid_argument("ue_moment: need n >= 1 and N >= 1");
    BigInt p = 0;
    BigInt npow = 1; // N^{n-1-k} built downward
    for (std::int64_t i = 0; i < n - 1; ++i) npow *= dim;
    for (std::int64_t k = 0; k <= n - 1; ++k) {
        const BigInt term = borel_triangle(n - 1, k) * npow;
        p += (k % 2 == 0) ? term : -term;
        if (k < n - 1) npow /= dim;
    }
    return p;
}

BigRat ue_moment(std::int64_t n, std::int64_t dim) {
    BigInt denom = 1;
    for (std::int64_t i = 0; i < 2 * (n - 1); ++i) denom *= dim;
    return BigRat(ue_moment_scaled_poly(n, dim), denom);
}

BigRat hs_moment(std::int64_t n, std::int64_t dim) {
    if (dim < 1) throw std::invalid_argument("hs_moment: N must be >= 1");
    const BigInt N = dim;
    if (n == 2) return BigRat(2 * N, N * N + 1);
    if (n == 3) return BigRat(5 * N * N + 1, (N * N + 1) * (N * N + 2));
    throw std::invalid_argument("hs_moment: only orders 2 and 3 are available");
}

double ue_moment_continued(double x, std::int64_t dim) {
    if (!(x > 0.0)) throw std::invalid_argument("ue_moment_continued: x must be positive");
    if (dim < 1) throw std::invalid_argument("ue_moment_continued: N must be >= 1");
    if (dim == 1) return 1.0; // Gauss sum of the ₂F₁ at unit argument
    const double n = static_cast<double>(dim);
    // ₂F₁(x, 1-x; 2+x; 1/N) by its power series; terminates at integer x.
    double term = 1.0, sum = 1.0;
    for (int m = 0; m < 4000; ++m) {
        term *= (x + m) * (1.0 - x + m) / ((2.0 + x + m) * (m + 1.0) * n);
        sum += term;
        if (term == 0.0 || std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    const double prefactor =
        std::exp(std::lgamma(2.0 * x + 1.0) - std::lgamma(x + 1.0) - std::lgamma(x + 2.0) -
                 (x - 1.0) * std::log(n));
    return prefactor * sum;
}

double ue_mean_entropy(std::int64_t dim) {
    if (dim < 1) throw std::invalid_argument("ue_mean_entropy: N must be >= 1");
    if (dim == 1) return 0.0;
    const double n = static_cast<double>(dim);
    return std::log(n) - (n - 1.0) - (n - 1.0) * (n - 1.0) * std::log((n - 1.0) / n);
}

double hs_mean_entropy(std::int64_t dim) {
    if (dim < 1) throw std::invalid_argument("hs_mean_entropy: N must be >= 1");
    const double n = static_cast<double>(dim);
    double harmonic_tail = 0.0;
    for (std::int64_t k = dim * dim; k > dim; --k) harmonic_tail += 1.0 / static_cast<double>(k);
    return harmonic_tail - (n - 1.0) / (2.0 * n);
}

std::array<BigRat, 5> ue_cumulants(std::int64_t dim) {
    if (dim < 1) throw std::invalid_argument("ue_cumulants: N must be >= 1");
    const BigInt N = dim;
    const BigInt N2 = N * N, N3 = N2 * N, N4 = N3 * N;
    return {
        BigRat(1),
        BigRat(N - 1, N),
        BigRat((N - 1) * (N - 2), N2),
        BigRat(-(N - 1) * (4 * N - 5), N3),
        BigRat(-(N - 1) * (N - 2) * (4 * N2 + 2 * N - 7), N4),
    };
}

std::vector<BigRat> cumulants_from_moments(const std::vector<BigRat>& raw_moments) {
    const std::size_t count = raw_moments.size();
    std::vector<BigRat> kappa(count);
    for (std::size_t n = 1; n <= count; ++n) {
        BigRat k = raw_moments[n - 1];
        for (std::size_t j = 1; j < n; ++j)
            k -= BigRat(binomial(static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>(j - 1))) *
                 kappa[j - 1] * raw_moments[n - j - 1];
        kappa[n - 1] = k;
    }
    return kappa;
}

double haar_gate_entropy_reference(std::int64_t dim) {
    if (dim < 1) throw std::invalid_argument("haar_gate_entropy_reference: N must be >= 1");
    return 2.0 * std::log(static_cast<double>(dim)) - 0.5;
}

double mp_density(double x) {
    if (x <= 0.0 || x > 4.0) return 0.0;
    return std::sqrt(1.0 / x - 0.25) / std::numbers::pi;
}

BigInt mp_moment(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("mp_moment: n must be nonnegative");
    return catalan_number(n);
}

double arcsine_density(double x) {
    if (x <= 0.0 || x >= 2.0) return 0.0;
    return 1.0 / (std::numbers::pi * std::sqrt(x * (2.0 - x)));
}

BigRat arcsine_moment(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("arcsine_moment: n must be nonnegative");
    BigInt two_pow = BigInt(1) << static_cast<unsigned>(n);
    return BigRat(binomial(2 * n, n), two_pow);
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double eps, int depth, int force) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) return left + right + delta / 15.0;
    // The first few levels always subdivide: symmetric integrands can fool
    // the error estimate on the coarse grid.
    if (force <= 0 && std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1, force - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1, force - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48, 6);
}

double integrate_mp(const std::function<double(double)>& f, double rel_tol) {
    // x = 4 sin²θ: the inverse-square-root edges cancel against the Jacobian,
    // P_MP(x) dx = (4/π) cos²θ dθ, leaving a smooth integrand on [0, π/2].
    const auto g = [&f](double theta) {
        const double s = std::sin(theta), c = std::cos(theta);
        return f(4.0 * s * s) * (4.0 / std::numbers::pi) * c * c;
    };
    return integrate(g, 0.0, std::numbers::pi / 2.0, rel_tol);
}

double integrate_arcsine(const std::function<double(double)>& f, double rel_tol) {
    // x = 2 sin²θ: P_As(x) dx = (2/π) dθ exactly.
    const auto g = [&f](double theta) {
        const double s = std::sin(theta);
        return f(2.0 * s * s) * (2.0 / std::numbers::pi);
    };
    return integrate(g, 0.0, std::numbers::pi / 2.0, rel_tol);
}

std::int64_t count_doublet_words(std::int64_t alphabet, std::int64_t insertions) {
    if (alphabet < 1 || insertions < 1)
        throw std::invalid_argument("count_doublet_words: need N >= 1 and n >= 1");
    if (alphabet > 4 || insertions > 5)
        throw std::length_error("count_doublet_words: enumeration budget is N <= 4, n <= 5");
    std::set<std::string> words{""};
    for (std::int64_t step = 0; step < insertions; ++step) {
        std::set<std::string> next;
        for (const auto& w : words)
            for (char c = 'a'; c < 'a' + alphabet; ++c) {
                const std::string doublet{c, c};
                for (std::size_t pos = 0; pos <= w.size(); ++pos)
                    next.insert(w.substr(0, pos) + doublet + w.substr(pos));
            }
        words = std::move(next);
    }
    return static_cast<std::int64_t>(
        std::count_if(words.begin(), words.end(), [](const std::string& w) { return w[0] == 'a'; }));
}

} // namespace unimod
