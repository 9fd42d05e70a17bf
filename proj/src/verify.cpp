#include "unimod/verify.hpp"

#include "unimod/contradiag.hpp"
#include "unimod/ensembles.hpp"
#include "unimod/epower.hpp"
#include "unimod/linalg.hpp"
#include "unimod/moments.hpp"
#include "unimod/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unimod {

namespace {

void add(std::vector<CheckResult>& out, std::string name, double value, double reference,
         double bound) {
    CheckResult r;
    r.name = std::move(name);
    r.value = value;
    r.reference = reference;
    r.margin = std::abs(value - reference);
    r.bound = bound;
    r.pass = r.margin <= bound;
    out.push_back(std::move(r));
}

void add_flag(std::vector<CheckResult>& out, std::string name, bool ok) {
    CheckResult r;
    r.name = std::move(name);
    r.value = ok ? 1.0 : 0.0;
    r.reference = 1.0;
    r.margin = ok ? 0.0 : 1.0;
    r.bound = 0.0;
    r.pass = ok;
    out.push_back(std::move(r));
}

struct MeanAccumulator {
    double sum = 0.0, sum_sq = 0.0;
    std::int64_t count = 0;

    void push(double v) {
        sum += v;
        sum_sq += v * v;
        ++count;
    }
    double mean() const { return sum / static_cast<double>(count); }
    double stderr_() const {
        const double m = mean();
        const double var = std::max(0.0, sum_sq / static_cast<double>(count) - m * m);
        return std::sqrt(var / static_cast<double>(count - 1));
    }
};

std::vector<CheckResult> suite_combinatorics() {
    std::vector<CheckResult> out;
    bool identity_ok = true, recursion_ok = true, edges_ok = true;
    try {
        for (std::int64_t n = 0; n <= 20; ++n)
            for (std::int64_t k = 0; k <= n; ++k)
                (void)borel_triangle(n, k); // throws if the two formulas disagree
    } catch (const std::logic_error&) {
        identity_ok = false;
    }
    for (std::int64_t n = 1; n <= 20; ++n)
        for (std::int64_t k = 1; k <= n; ++k) {
            const BigInt rec = catalan_triangle(n, k - 1) +
                               (k <= n - 1 ? catalan_triangle(n - 1, k) : BigInt(0));
            if (catalan_triangle(n, k) != rec) recursion_ok = false;
        }
    for (std::int64_t n = 0; n <= 20; ++n) {
        if (borel_triangle(n, 0) != catalan_number(n + 1)) edges_ok = false;
        if (borel_triangle(n, n) != catalan_number(n)) edges_ok = false;
    }
    add_flag(out, "borel_double_identity_n<=20", identity_ok);
    add_flag(out, "catalan_triangle_recursion_n<=20", recursion_ok);
    add_flag(out, "borel_edges_are_catalan_n<=20", edges_ok);

    const std::int64_t row7[] = {429, 2002, 4004, 4368, 2730, 924, 132};
    bool row_ok = true;
    for (std::int64_t k = 0; k <= 6; ++k)
        if (borel_triangle(6, k) != row7[k]) row_ok = false;
    add_flag(out, "borel_row7_printed_values", row_ok);

    bool words_ok = true;
    for (std::int64_t alpha = 1; alpha <= 3; ++alpha)
        for (std::int64_t n = 1; n <= 3; ++n)
            if (BigInt(count_doublet_words(alpha, n)) != ue_moment_scaled_poly(n, alpha))
                words_ok = false;
    if (BigInt(count_doublet_words(2, 4)) != ue_moment_scaled_poly(4, 2)) words_ok = false;
    add_flag(out, "doublet_word_counts_match_conjecture", words_ok);
    return out;
}

std::vector<CheckResult> suite_moments(std::uint64_t seed) {
    std::vector<CheckResult> out;
    bool rational_ok = true;
    for (std::int64_t n = 1; n <= 50; ++n) {
        const BigInt N = n;
        if (ue_moment(2, n) != BigRat(2 * N - 1, N * N)) rational_ok = false;
        if (ue_moment(3, n) != BigRat(5 * N * N - 6 * N + 2, N * N * N * N)) rational_ok = false;
    }
    add_flag(out, "ue_moment_hand_polynomials_N<=50", rational_ok);

    for (const std::int64_t dim : {2, 4}) {
        constexpr std::int64_t kSamples = 20000;
        std::vector<MeanAccumulator> acc(3);
        for (std::int64_t i = 0; i < kSamples; ++i) {
            RandomStream stream(seed, static_cast<std::uint64_t>(i));
            const DensityMatrix rho = unimodular_to_state(sample_unimodular(dim, stream));
            const RVec lambda = rho.eigenvalues().values();
            double scale = static_cast<double>(dim);
            for (int n = 2; n <= 4; ++n) {
                acc[n - 2].push(scale * lambda.array().pow(n).sum());
                scale *= static_cast<double>(dim);
            }
        }
        for (int n = 2; n <= 4; ++n) {
            const double expected =
                static_cast<double>(ue_moment(n, dim)) * std::pow(static_cast<double>(dim), n - 1);
            const double z = (acc[n - 2].mean() - expected) / acc[n - 2].stderr_();
            add(out, "ue_mc_M" + std::to_string(n) + "_N" + std::to_string(dim), z, 0.0, 4.0);
        }
    }

    bool continuation_ok = true;
    for (std::int64_t n = 1; n <= 8; ++n)
        for (const std::int64_t dim : {2, 3, 5, 10}) {
            const double exact = static_cast<double>(ue_moment(n, dim));
            if (std::abs(ue_moment_continued(static_cast<double>(n), dim) - exact) >
                1e-12 * std::abs(exact))
                continuation_ok = false;
        }
    add_flag(out, "continued_moments_match_integers", continuation_ok);
    return out;
}

std::vector<CheckResult> suite_entropy(std::uint64_t seed) {
    std::vector<CheckResult> out;
    add(out, "ue_mean_entropy_N2", ue_mean_entropy(2), std::log(4.0) - 1.0, 1e-15);
    add(out, "hs_mean_entropy_N2", hs_mean_entropy(2), 1.0 / 3.0, 1e-15);
    add(out, "ue_mean_entropy_N1000_asymptote", ue_mean_entropy(1000), std::log(1000.0) - 0.5,
        2e-3);

    for (const std::int64_t dim : {2, 3, 4}) {
        constexpr std::int64_t kSamples = 30000;
        MeanAccumulator acc;
        for (std::int64_t i = 0; i < kSamples; ++i) {
            RandomStream stream(seed + 1, static_cast<std::uint64_t>(i));
            const DensityMatrix rho = unimodular_to_state(sample_unimodular(dim, stream));
            acc.push(detail::entropy_of(rho.eigenvalues().values()));
        }
        const double z = (acc.mean() - ue_mean_entropy(dim)) / acc.stderr_();
        add(out, "ue_entropy_mc_N" + std::to_string(dim), z, 0.0, 4.0);
    }

    bool derivative_ok = true;
    for (const std::int64_t dim : {2, 3, 8}) {
        const double h = 1e-5;
        const double d =
            (ue_moment_continued(1.0 + h, dim) - ue_moment_continued(1.0 - h, dim)) / (2.0 * h);
        if (std::abs(-d - ue_mean_entropy(dim)) > 1e-6) derivative_ok = false;
    }
    add_flag(out, "entropy_is_minus_moment_derivative", derivative_ok);
    return out;
}

std::vector<CheckResult> suite_schmidt(std::uint64_t seed) {
    std::vector<CheckResult> out;
    RandomStream stream(seed + 2);

    bool involution_ok = true;
    for (Eigen::Index n = 2; n <= 5; ++n) {
        CMat x(n * n, n * n);
        for (Eigen::Index r = 0; r < n * n; ++r)
            for (Eigen::Index c = 0; c < n * n; ++c) x(r, c) = stream.complex_normal();
        const BipartiteOperator op(x, n, n);
        if ((reshuffle(reshuffle(op)).mat() - x).cwiseAbs().maxCoeff() != 0.0)
            involution_ok = false;
    }
    add_flag(out, "reshuffle_involution_exact", involution_ok);

    for (const Eigen::Index n : {2, 3, 4}) {
        const BipartiteOperator f = fourier_gate(n * n);
        add(out, "fourier_gate_entropy_N" + std::to_string(n), gate_entanglement_entropy(f, 1.0),
            2.0 * std::log(static_cast<double>(n)), 1e-10);
    }

    const CMat ua = sample_haar_unitary(3, stream);
    const CMat ub = sample_haar_unitary(3, stream);
    CMat prod(9, 9);
    for (Eigen::Index a = 0; a < 3; ++a)
        for (Eigen::Index b = 0; b < 3; ++b) prod.block(a * 3, b * 3, 3, 3) = ua(a, b) * ub;
    add(out, "product_gate_entropy", gate_entanglement_entropy(BipartiteOperator(prod, 3, 3), 1.0),
        0.0, 1e-10);

    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        const BipartiteOperator gate = sample_diagonal_gate(4, stream);
        const RVec direct = schmidt_spectrum(gate).coefficients;
        RVec reshaped = singular_values(diagonal_gate_to_unimodular(gate)).array().square();
        RVec padded = RVec::Zero(direct.size());
        padded.head(reshaped.size()) = reshaped;
        worst = std::max(worst, (direct - padded).cwiseAbs().maxCoeff());
    }
    add(out, "diagonal_gate_schmidt_vs_reshaped", worst, 0.0, 1e-10);
    return out;
}

std::vector<CheckResult> suite_contradiag(std::uint64_t seed) {
    std::vector<CheckResult> out;
    RandomStream stream(seed + 3);

    double worst_f = 0.0, worst_diag = 0.0, worst_probe = -1.0;
    for (const Eigen::Index n : {2, 3, 5, 8}) {
        for (int rep = 0; rep < 100; ++rep) {
            CMat g = sample_ginibre(n, stream);
            const CMat h = (g + g.adjoint()) / 2.0;
            const ContradiagResult r = contradiagonalize(h);
            const double fmax =
                (h * h).trace().real() - std::pow(h.trace().real(), 2) / static_cast<double>(n);
            worst_f = std::max(worst_f, std::abs(r.offdiag - fmax));
            const double t = h.trace().real() / static_cast<double>(n);
            worst_diag = std::max(
                worst_diag, (r.transformed.diagonal().array() - Complex(t, 0)).abs().maxCoeff());
            const CMat v = sample_haar_unitary(n, stream);
            CMat w = v * h * v.adjoint();
            w = (w + w.adjoint()) / 2.0;
            worst_probe = std::max(worst_probe, offdiag_weight(w) - fmax);
        }
    }
    add(out, "offdiag_weight_hits_analytic_max", worst_f, 0.0, 1e-8);
    add(out, "contradiagonal_diagonal_flat", worst_diag, 0.0, 1e-9);
    add_flag(out, "random_probes_below_max", worst_probe <= 1e-8);

    bool chain_ok = true;
    for (int rep = 0; rep < 200; ++rep) {
        const DensityMatrix sigma = unimodular_to_state(sample_unimodular(4, stream));
        const CMat u = sample_haar_unitary(4, stream);
        if (!majorization_chain_check(sigma, u)) chain_ok = false;
    }
    add_flag(out, "majorization_chain_holds", chain_ok);

    double worst_target = 0.0, worst_spec = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        CMat g = sample_ginibre(5, stream);
        const CMat h = (g + g.adjoint()) / 2.0;
        const HermitianEig eig = eig_hermitian(h);
        RVec x = eig.values;
        for (int t = 0; t < 8; ++t) { // random Robin-Hood transfers keep x majorized by the spectrum
            const auto i = static_cast<Eigen::Index>(stream.next_u64() % 5);
            const auto j = static_cast<Eigen::Index>(stream.next_u64() % 5);
            if (i == j) continue;
            const double share = 0.5 * stream.uniform01();
            const double delta = share * (x[i] - x[j]);
            x[i] -= delta;
            x[j] += delta;
        }
        const CMat v = prescribe_diagonal(h, x);
        const CMat m = v * h * v.adjoint();
        worst_target = std::max(worst_target, (m.diagonal().real() - x).cwiseAbs().maxCoeff());
        RVec before = eig.values;
        RVec after = eig_hermitian((m + m.adjoint()) / 2.0).values;
        worst_spec = std::max(worst_spec, (before - after).cwiseAbs().maxCoeff());
    }
    add(out, "prescribe_diagonal_hits_target", worst_target, 0.0, 1e-8);
    add(out, "prescribe_diagonal_preserves_spectrum", worst_spec, 0.0, 1e-9);
    return out;
}

std::vector<CheckResult> suite_epower(std::uint64_t seed) {
    std::vector<CheckResult> out;
    add(out, "mean_epower_diag_N2", mean_epower_diag(2), 1.0 / 9.0, 1e-15);
    add(out, "mean_epower_haar_N2", mean_epower_haar(2), 0.2, 1e-15);

    bool ordering_ok = true;
    for (std::int64_t n = 2; n <= 50; ++n)
        if (!(mean_epower_haar(n) > mean_epower_diag(n))) ordering_ok = false;
    add_flag(out, "haar_epower_exceeds_diag", ordering_ok);

    RandomStream gate_stream(seed + 4);
    const BipartiteOperator gate = sample_diagonal_gate(2, gate_stream);
    RandomStream mc_stream(seed + 5);
    const EpowerReport report = entangling_power_mc(gate, 20000, mc_stream);
    const double per_gate = 1.0 - diag_gate_avg_purity(gate);
    add(out, "per_gate_mc_vs_formula", (report.estimate - per_gate) / report.stderr_, 0.0, 4.0);

    MeanAccumulator acc;
    for (std::int64_t g = 0; g < 2000; ++g) {
        RandomStream stream(seed + 6, static_cast<std::uint64_t>(g));
        const BipartiteOperator u = sample_diagonal_gate(2, stream);
        EpowerReport r = entangling_power_mc(u, 100, stream);
        acc.push(r.estimate);
    }
    add(out, "double_average_vs_one_ninth", (acc.mean() - 1.0 / 9.0) / acc.stderr_(), 0.0, 4.0);
    return out;
}

} // namespace

std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed) {
    if (suite == "combinatorics") return suite_combinatorics();
    if (suite == "moments") return suite_moments(seed);
    if (suite == "entropy") return suite_entropy(seed);
    if (suite == "schmidt") return suite_schmidt(seed);
    if (suite == "contradiag") return suite_contradiag(seed);
    if (suite == "epower") return suite_epower(seed);
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const char* s : {"combinatorics", "moments", "entropy", "schmidt", "contradiag",
                              "epower"}) {
            auto part = run_verify_suite(s, seed);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown verify suite: " + suite);
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

} // namespace unimod
