#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"
#include "unimod/linalg.hpp"
#include "unimod/moments.hpp"

#include <cmath>
#include <numbers>

using namespace unimod;
using unimod::testing::RunningMean;

TEST_CASE("catalan numbers") {
    const std::int64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (std::int64_t k = 0; k <= 7; ++k) CHECK(catalan_number(k) == expected[k]);
    CHECK_THROWS_AS(catalan_number(-1), std::invalid_argument);
}

TEST_CASE("catalan triangle matches its printed rows and recursion") {
    CHECK(catalan_triangle(4, 3) == 14);
    CHECK(catalan_triangle(2, 2) == 2);
    for (std::int64_t n = 0; n <= 20; ++n) CHECK(catalan_triangle(n, 0) == 1);
    for (std::int64_t n = 1; n <= 20; ++n)
        for (std::int64_t k = 1; k <= n; ++k) {
            const BigInt rec = catalan_triangle(n, k - 1) +
                               (k <= n - 1 ? catalan_triangle(n - 1, k) : BigInt(0));
            CHECK(catalan_triangle(n, k) == rec);
        }
    CHECK_THROWS_AS(catalan_triangle(3, 4), std::invalid_argument);
}

TEST_CASE("borel triangle printed values and edge identities") {
    CHECK(borel_triangle(3, 1) == 28);
    CHECK(borel_triangle(4, 2) == 135);
    CHECK(borel_triangle(6, 3) == 4368);

    const std::int64_t rows[7][7] = {{1}, {2, 1}, {5, 6, 2}, {14, 28, 20, 5},
                                     {42, 120, 135, 70, 14}, {132, 495, 770, 616, 252, 42},
                                     {429, 2002, 4004, 4368, 2730, 924, 132}};
    for (std::int64_t n = 0; n <= 6; ++n)
        for (std::int64_t k = 0; k <= n; ++k) CHECK(borel_triangle(n, k) == rows[n][k]);

    for (std::int64_t n = 0; n <= 20; ++n) {
        CHECK(borel_triangle(n, 0) == catalan_number(n + 1));
        CHECK(borel_triangle(n, n) == catalan_number(n));
        for (std::int64_t k = 0; k <= n; ++k) (void)borel_triangle(n, k); // double identity
    }
    CHECK_THROWS_AS(borel_triangle(2, 3), std::invalid_argument);
}

TEST_CASE("ue moments reproduce the hand-derived polynomials exactly") {
    CHECK(ue_moment(2, 2) == BigRat(3, 4));
    for (std::int64_t N = 1; N <= 50; ++N) {
        const BigInt n = N;
        const BigInt n2 = n * n, n3 = n2 * n, n4 = n3 * n;
        CHECK(ue_moment(2, N) == BigRat(2 * n - 1, n2));
        CHECK(ue_moment(3, N) == BigRat(5 * n2 - 6 * n + 2, n4));
        CHECK(ue_moment(4, N) == BigRat(14 * n3 - 28 * n2 + 20 * n - 5, n4 * n2));
        CHECK(ue_moment(5, N) ==
              BigRat(42 * n4 - 120 * n3 + 135 * n2 - 70 * n + 14, n4 * n4));
    }
    for (std::int64_t n = 1; n <= 8; ++n) CHECK(ue_moment(n, 1) == BigRat(1));
    CHECK_THROWS_AS(ue_moment(0, 2), std::invalid_argument);
}

TEST_CASE("scaled moments approach the catalan numbers") {
    for (std::int64_t n = 1; n <= 7; ++n) {
        const double limit = BigRat(catalan_number(n)).convert_to<double>();
        BigInt scale = 1;
        for (std::int64_t i = 0; i < n - 1; ++i) scale *= 1000000;
        const double m = (ue_moment(n, 1000000) * BigRat(scale)).convert_to<double>();
        CHECK(std::abs(m - limit) / limit < 1e-4);
        CHECK(mp_moment(n) == catalan_number(n));
    }
}

TEST_CASE("scaled N=3 moments form the OEIS column 1, 5, 29, 181, 1181") {
    const std::int64_t sequence[] = {1, 5, 29, 181, 1181};
    for (std::int64_t n = 1; n <= 5; ++n)
        CHECK(ue_moment_scaled_poly(n, 3) == sequence[n - 1]);
}

TEST_CASE("moment report validation") {
    MomentReport report;
    report.order = 2;
    report.dimension = 3;
    report.analytic = ue_moment(2, 3);
    report.mc_estimate = 0.55;
    report.standard_error = 0.001;
    report.samples = 100;
    CHECK_NOTHROW(report.validate());
    report.standard_error = 0.0;
    CHECK_THROWS_AS(report.validate(), std::invalid_argument);
}

TEST_CASE("hs moments") {
    CHECK(hs_moment(2, 2) == BigRat(4, 5));
    CHECK(hs_moment(3, 2) == BigRat(7, 10));
    CHECK(hs_moment(2, 1) == BigRat(1));
    CHECK_THROWS_AS(hs_moment(4, 2), std::invalid_argument);

    // HS states are less mixed: purity gap (N-1)²/(N²(N²+1))
    for (std::int64_t N = 2; N <= 50; ++N) {
        const BigInt n = N;
        CHECK(hs_moment(2, N) - ue_moment(2, N) ==
              BigRat((n - 1) * (n - 1), n * n * (n * n + 1)));
    }
}

TEST_CASE("continued moments extend the integer moments") {
    for (std::int64_t N : {1, 2, 3, 10}) CHECK(ue_moment_continued(1.0, N) == doctest::Approx(1.0));
    CHECK(ue_moment_continued(2.0, 3) == doctest::Approx(5.0 / 9.0).epsilon(1e-13));
    for (std::int64_t n = 1; n <= 9; ++n)
        for (std::int64_t N : {2, 4, 17}) {
            const double exact = ue_moment(n, N).convert_to<double>();
            CHECK(ue_moment_continued(static_cast<double>(n), N) ==
                  doctest::Approx(exact).epsilon(1e-12));
        }
    CHECK_THROWS_AS(ue_moment_continued(0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ue_moment_continued(-1.0, 2), std::invalid_argument);
}

TEST_CASE("continued moment at x = 1.5 matches Monte Carlo") {
    constexpr int kSamples = 200000;
    RunningMean acc;
    for (int i = 0; i < kSamples; ++i) {
        RandomStream stream(30, static_cast<std::uint64_t>(i));
        const RVec lambda =
            unimodular_to_state(sample_unimodular(2, stream)).eigenvalues().values();
        acc.push(lambda.array().pow(1.5).sum());
    }
    CHECK(std::abs(acc.mean() - ue_moment_continued(1.5, 2)) < 3.0 * acc.stderr_());
}

TEST_CASE("mean entropies") {
    CHECK(ue_mean_entropy(2) == doctest::Approx(std::log(4.0) - 1.0).epsilon(1e-14));
    CHECK(ue_mean_entropy(1) == 0.0);
    CHECK(std::abs(ue_mean_entropy(1000) - (std::log(1000.0) - 0.5)) < 2e-3);

    CHECK(hs_mean_entropy(2) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(hs_mean_entropy(1) == 0.0);
    for (std::int64_t N = 2; N <= 50; ++N) CHECK(hs_mean_entropy(N) < ue_mean_entropy(N));
}

TEST_CASE("entropy equals the negative derivative of the continued moments") {
    const double h = 1e-5;
    for (std::int64_t N : {2, 3, 4, 10}) {
        const double d =
            (ue_moment_continued(1.0 + h, N) - ue_moment_continued(1.0 - h, N)) / (2.0 * h);
        CHECK(std::abs(-d - ue_mean_entropy(N)) < 1e-6);
    }
}

TEST_CASE("cumulants: closed forms, recursion, and limits") {
    const auto at1 = ue_cumulants(1);
    CHECK(at1[0] == BigRat(1));
    for (int i = 1; i < 5; ++i) CHECK(at1[i] == BigRat(0));

    CHECK(ue_cumulants(2)[3] == BigRat(-3, 8));

    for (std::int64_t N = 1; N <= 30; ++N) {
        // raw moments of the scaled eigenvalue x = Nλ: m_n = N^{n-1}⟨Tr ρⁿ⟩
        std::vector<BigRat> m;
        for (std::int64_t n = 1; n <= 5; ++n) {
            BigInt scale = 1;
            for (std::int64_t i = 0; i < n - 1; ++i) scale *= N;
            m.push_back(ue_moment(n, N) * BigRat(scale));
        }
        const auto kappa = cumulants_from_moments(m);
        const auto closed = ue_cumulants(N);
        for (int i = 0; i < 5; ++i) CHECK(kappa[static_cast<std::size_t>(i)] == closed[i]);
    }

    const auto at_large = ue_cumulants(1000000);
    const double limits[] = {1.0, 1.0, 1.0, 0.0, -4.0};
    for (int i = 0; i < 5; ++i)
        CHECK(std::abs(at_large[i].convert_to<double>() - limits[i]) < 1e-4);
}

TEST_CASE("marchenko-pastur density and moments") {
    CHECK(mp_moment(2) == 2);
    CHECK(integrate_mp([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-8));
    for (std::int64_t n = 1; n <= 7; ++n) {
        const double exact = BigRat(mp_moment(n)).convert_to<double>();
        const double quad = integrate_mp([n](double x) { return std::pow(x, n); });
        CHECK(std::abs(quad - exact) < 1e-6 * std::max(1.0, exact));
    }
    const double entropy_offset =
        integrate_mp([](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; });
    CHECK(std::abs(entropy_offset - (-0.5)) < 1e-6);

    CHECK(mp_density(-1.0) == 0.0);
    CHECK(mp_density(5.0) == 0.0);
    CHECK(mp_density(1.0) == doctest::Approx(std::sqrt(0.75) / std::numbers::pi));
}

TEST_CASE("arcsine density and moments") {
    CHECK(integrate_arcsine([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(arcsine_moment(5) == BigRat(63, 8));
    // equals 2⁴ times the N = 2 fifth moment
    CHECK(arcsine_moment(5) == ue_moment(5, 2) * BigRat(16));
    for (std::int64_t n = 0; n <= 6; ++n) {
        const double exact = arcsine_moment(n).convert_to<double>();
        const double quad = integrate_arcsine([n](double x) { return std::pow(x, n); });
        CHECK(std::abs(quad - exact) < 1e-6 * std::max(1.0, exact));
    }
    // eigenvalue entropy of the N = 2 ensemble: substitute y = x/2
    const double mean_entropy = integrate_arcsine([](double x) {
        const double y = x / 2.0;
        return y > 0.0 ? -2.0 * y * std::log(y) : 0.0;
    });
    CHECK(std::abs(mean_entropy - (std::log(4.0) - 1.0)) < 1e-6);

    CHECK(arcsine_density(2.5) == 0.0);
    CHECK(arcsine_density(1.0) == doctest::Approx(1.0 / std::numbers::pi));
}

TEST_CASE("doublet word counts") {
    CHECK(count_doublet_words(2, 2) == 3); // aaaa, aabb, abba
    for (std::int64_t n = 1; n <= 4; ++n) CHECK(count_doublet_words(1, n) == 1);
    CHECK(count_doublet_words(3, 2) == 5); // 2N - 1
    CHECK_THROWS_AS(count_doublet_words(5, 2), std::length_error);
    CHECK_THROWS_AS(count_doublet_words(2, 6), std::length_error);

    for (std::int64_t alpha = 1; alpha <= 3; ++alpha)
        for (std::int64_t n = 1; n <= 3; ++n)
            CHECK(BigInt(count_doublet_words(alpha, n)) == ue_moment_scaled_poly(n, alpha));
}

TEST_CASE("haar gate entropy reference") {
    CHECK(haar_gate_entropy_reference(2) == doctest::Approx(2.0 * std::log(2.0) - 0.5));
    CHECK(haar_gate_entropy_reference(10) == doctest::Approx(2.0 * std::log(10.0) - 0.5));
    // twice the diagonal-gate asymptote for large N
    const double ratio = haar_gate_entropy_reference(100000) / (std::log(100000.0) - 0.5);
    CHECK(std::abs(ratio - 2.0) < 0.05);
}

TEST_CASE("monte carlo moments agree with the conjecture at unit-test scale") {
    constexpr int kSamples = 20000;
    for (const Eigen::Index dim : {2, 4}) {
        RunningMean m2, m3;
        for (int i = 0; i < kSamples; ++i) {
            RandomStream stream(31, static_cast<std::uint64_t>(i));
            const RVec lambda =
                unimodular_to_state(sample_unimodular(dim, stream)).eigenvalues().values();
            const double n = static_cast<double>(dim);
            m2.push(n * lambda.array().square().sum());
            m3.push(n * n * lambda.array().cube().sum());
        }
        const double e2 = (ue_moment(2, dim) * BigRat(dim)).convert_to<double>();
        const double e3 = (ue_moment(3, dim) * BigRat(BigInt(dim) * dim)).convert_to<double>();
        CHECK(std::abs(m2.mean() - e2) < 4.0 * m2.stderr_());
        CHECK(std::abs(m3.mean() - e3) < 4.0 * m3.stderr_());
    }
}
