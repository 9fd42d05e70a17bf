#include "unimod/contradiag.hpp"
#include "unimod/ensembles.hpp"
#include "unimod/epower.hpp"
#include "unimod/linalg.hpp"
#include "unimod/matrix_io.hpp"
#include "unimod/moments.hpp"
#include "unimod/records.hpp"
#include "unimod/schmidt.hpp"
#include "unimod/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

namespace {

constexpr const char* kVersion = "0.1.0";

using namespace unimod;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("UNIMOD_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

Record scalar_record(std::int64_t sample, const char* series, std::int64_t index, double value) {
    return Record{{"record", std::string("scalar")},
                  {"sample", sample},
                  {"series", std::string(series)},
                  {"index", index},
                  {"value", value}};
}

Record point_record(std::int64_t sample, const char* series, std::int64_t index, Complex z) {
    return Record{{"record", std::string("point")},
                  {"sample", sample},
                  {"series", std::string(series)},
                  {"index", index},
                  {"re", z.real()},
                  {"im", z.imag()}};
}

void append_histogram(std::vector<Record>& records, const std::vector<double>& values,
                      const char* series, int bins) {
    if (bins <= 0 || values.empty()) return;
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    const double width = (hi > lo ? hi - lo : 1.0) / bins;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(bins), 0);
    for (double v : values) {
        auto b = static_cast<std::int64_t>((v - lo) / width);
        b = std::clamp<std::int64_t>(b, 0, bins - 1);
        ++counts[static_cast<std::size_t>(b)];
    }
    for (std::int64_t b = 0; b < bins; ++b)
        records.push_back(Record{{"record", std::string("hist")},
                                 {"series", std::string(series)},
                                 {"index", b},
                                 {"lo", lo + width * static_cast<double>(b)},
                                 {"hi", lo + width * static_cast<double>(b + 1)},
                                 {"count", counts[static_cast<std::size_t>(b)]}});
}

struct MeanTracker {
    double sum = 0.0, sum_sq = 0.0;
    std::int64_t count = 0;
    void push(double v) {
        sum += v;
        sum_sq += v * v;
        ++count;
    }
    double mean() const { return sum / static_cast<double>(count); }
    double stderr_() const {
        if (count < 2) return 0.0;
        const double m = mean();
        const double var = std::max(0.0, sum_sq / static_cast<double>(count) - m * m);
        return std::sqrt(var / static_cast<double>(count - 1));
    }
};

int cmd_sample(EnsembleKind kind, Eigen::Index n, std::int64_t samples, std::uint64_t seed,
               const std::string& out, RecordFormat format, int bins, double q) {
    EnsembleConfig config{kind, n, samples, seed};
    config.validate();
    Timer timer;
    Dataset data;
    std::vector<double> hist_values;
    const char* hist_series = "x";

    for (std::int64_t i = 0; i < samples; ++i) {
        RandomStream stream(seed, static_cast<std::uint64_t>(i));
        switch (kind) {
            case EnsembleKind::unimodular: {
                const CMat a = sample_unimodular(n, stream);
                const RVec lambda = unimodular_to_state(a).eigenvalues().values();
                for (Eigen::Index k = 0; k < lambda.size(); ++k) {
                    data.records.push_back(scalar_record(i, "eig_rho", k, lambda[k]));
                    hist_values.push_back(static_cast<double>(n) * lambda[k]);
                }
                hist_series = "x_scaled";
                const CVec ev =
                    CMat(a / std::sqrt(static_cast<double>(n))).eigenvalues();
                for (Eigen::Index k = 0; k < ev.size(); ++k)
                    data.records.push_back(point_record(i, "eig_a_scaled", k, ev[k]));
                break;
            }
            case EnsembleKind::ginibre: {
                const CMat g = sample_ginibre(n, stream);
                const CVec ev = CMat(g / std::sqrt(static_cast<double>(n))).eigenvalues();
                for (Eigen::Index k = 0; k < ev.size(); ++k)
                    data.records.push_back(point_record(i, "eig_g_scaled", k, ev[k]));
                const RVec sv = singular_values(g);
                for (Eigen::Index k = 0; k < sv.size(); ++k) {
                    const double x = sv[k] * sv[k] / static_cast<double>(n);
                    data.records.push_back(scalar_record(i, "sv_sq_scaled", k, x));
                    hist_values.push_back(x);
                }
                hist_series = "x_scaled";
                break;
            }
            case EnsembleKind::hilbert_schmidt_state: {
                const RVec lambda = sample_hs_state(n, stream).eigenvalues().values();
                for (Eigen::Index k = 0; k < lambda.size(); ++k) {
                    data.records.push_back(scalar_record(i, "eig_rho", k, lambda[k]));
                    hist_values.push_back(lambda[k]);
                }
                hist_series = "eig_rho";
                break;
            }
            case EnsembleKind::diagonal_gate: {
                const BipartiteOperator gate = sample_diagonal_gate(n, stream);
                const ProbabilitySpectrum lambda = schmidt_spectrum(gate).lambda();
                for (Eigen::Index k = 0; k < lambda.size(); ++k) {
                    data.records.push_back(scalar_record(i, "schmidt_lambda", k, lambda[k]));
                    hist_values.push_back(lambda[k]);
                }
                hist_series = "schmidt_lambda";
                data.records.push_back(scalar_record(i, "gate_entropy_q", 0,
                                                     renyi_entropy(lambda, q)));
                break;
            }
            case EnsembleKind::haar_pure_state: {
                const CVec psi = sample_haar_state(n, stream);
                for (Eigen::Index k = 0; k < psi.size(); ++k) {
                    const double p = std::norm(psi[k]);
                    data.records.push_back(scalar_record(i, "intensity", k, p));
                    hist_values.push_back(p);
                }
                hist_series = "intensity";
                break;
            }
        }
    }
    append_histogram(data.records, hist_values, hist_series, bins);

    data.manifest = {"sample",
                     Record{{"kind", to_string(kind)},
                            {"n", static_cast<std::int64_t>(n)},
                            {"samples", samples},
                            {"format", std::string(format == RecordFormat::csv ? "csv" : "jsonl")},
                            {"bins", static_cast<std::int64_t>(bins)},
                            {"q", q}},
                     seed,
                     kVersion,
                     timer.seconds()};
    write_dataset(out, data, format,
                  {"record", "sample", "series", "index", "value", "re", "im", "lo", "hi",
                   "count"});
    std::cout << "wrote " << data.records.size() << " records to " << out << "\n";
    return 0;
}

int cmd_moments(Eigen::Index n, int n_max, std::int64_t samples, std::uint64_t seed,
                const std::string& out, RecordFormat format) {
    if (n_max < 2 || n_max > 12)
        throw std::invalid_argument("moments: --n-max must lie in [2, 12]");
    EnsembleConfig config{EnsembleKind::unimodular, n, samples, seed};
    config.validate();
    Timer timer;

    std::vector<MeanTracker> trackers(static_cast<std::size_t>(n_max - 1));
    for (std::int64_t i = 0; i < samples; ++i) {
        RandomStream stream(seed, static_cast<std::uint64_t>(i));
        const RVec lambda = unimodular_to_state(sample_unimodular(n, stream)).eigenvalues().values();
        double scale = static_cast<double>(n);
        for (int m = 2; m <= n_max; ++m) {
            trackers[static_cast<std::size_t>(m - 2)].push(scale * lambda.array().pow(m).sum());
            scale *= static_cast<double>(n);
        }
    }

    Dataset data;
    for (int m = 2; m <= n_max; ++m) {
        const MeanTracker& t = trackers[static_cast<std::size_t>(m - 2)];
        MomentReport report;
        report.order = m;
        report.dimension = n;
        report.analytic = ue_moment(m, n);
        report.mc_estimate = t.mean();
        report.standard_error = t.stderr_();
        report.samples = samples;
        report.validate();
        std::ostringstream rational;
        rational << report.analytic;
        data.records.push_back(
            Record{{"record", std::string("moment")},
                   {"n", report.order},
                   {"N", report.dimension},
                   {"analytic", report.analytic.convert_to<double>()},
                   {"analytic_rational", rational.str()},
                   {"scaled_analytic", report.analytic.convert_to<double>() *
                                           std::pow(static_cast<double>(n), m - 1)},
                   {"mc_mean", report.mc_estimate},
                   {"mc_stderr", report.standard_error},
                   {"samples", report.samples}});
    }
    for (int m = 2; m <= 3; ++m) {
        const BigRat exact = hs_moment(m, n);
        std::ostringstream rational;
        rational << exact;
        data.records.push_back(Record{{"record", std::string("hs_moment")},
                                      {"n", static_cast<std::int64_t>(m)},
                                      {"N", static_cast<std::int64_t>(n)},
                                      {"analytic", exact.convert_to<double>()},
                                      {"analytic_rational", rational.str()}});
    }

    data.manifest = {"moments",
                     Record{{"n", static_cast<std::int64_t>(n)},
                            {"n_max", static_cast<std::int64_t>(n_max)},
                            {"samples", samples},
                            {"format", std::string(format == RecordFormat::csv ? "csv" : "jsonl")}},
                     seed,
                     kVersion,
                     timer.seconds()};
    write_dataset(out, data, format,
                  {"record", "n", "N", "analytic", "analytic_rational", "scaled_analytic",
                   "mc_mean", "mc_stderr", "samples"});
    std::cout << "wrote " << data.records.size() << " records to " << out << "\n";
    return 0;
}

int cmd_entropy(Eigen::Index n, std::int64_t samples, std::uint64_t seed, const std::string& out,
                RecordFormat format) {
    EnsembleConfig config{EnsembleKind::unimodular, n, samples, seed};
    config.validate();
    Timer timer;

    MeanTracker tracker;
    for (std::int64_t i = 0; i < samples; ++i) {
        RandomStream stream(seed, static_cast<std::uint64_t>(i));
        const RVec lambda = unimodular_to_state(sample_unimodular(n, stream)).eigenvalues().values();
        tracker.push(detail::entropy_of(lambda));
    }

    const double exact = ue_mean_entropy(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(samples));
    Dataset data;
    data.records.push_back(Record{{"record", std::string("entropy")},
                                  {"N", static_cast<std::int64_t>(n)},
                                  {"ue_exact", exact},
                                  {"hs_exact", hs_mean_entropy(n)},
                                  {"mc_mean", tracker.mean()},
                                  {"mc_stderr", tracker.stderr_()},
                                  {"samples", samples},
                                  {"scale", scale},
                                  {"consistent", std::abs(tracker.mean() - exact) <= scale}});

    data.manifest = {"entropy",
                     Record{{"n", static_cast<std::int64_t>(n)},
                            {"samples", samples},
                            {"format", std::string(format == RecordFormat::csv ? "csv" : "jsonl")}},
                     seed,
                     kVersion,
                     timer.seconds()};
    write_dataset(out, data, format,
                  {"record", "N", "ue_exact", "hs_exact", "mc_mean", "mc_stderr", "samples",
                   "scale", "consistent"});
    std::cout << "wrote entropy report to " << out << "\n";
    return 0;
}

void append_matrix_records(std::vector<Record>& records, const char* name, const CMat& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            records.push_back(Record{{"record", std::string("matrix")},
                                     {"name", std::string(name)},
                                     {"row", static_cast<std::int64_t>(r)},
                                     {"col", static_cast<std::int64_t>(c)},
                                     {"re", m(r, c).real()},
                                     {"im", m(r, c).imag()}});
}

int cmd_contradiag(const std::string& input, const std::string& hadamard, const std::string& out,
                   RecordFormat format) {
    Timer timer;
    const CMat h = read_matrix_file(input);
    if (!is_hermitian(h)) {
        // Point at the worst entry to ease fixing hand-written fixtures.
        Eigen::Index br = 0, bc = 0;
        double worst = -1.0;
        for (Eigen::Index r = 0; r < h.rows(); ++r)
            for (Eigen::Index c = 0; c < h.cols(); ++c) {
                const double d = std::abs(h(r, c) - std::conj(h(c, r)));
                if (d > worst) {
                    worst = d;
                    br = r;
                    bc = c;
                }
            }
        throw std::invalid_argument("contradiag: input is not Hermitian; largest asymmetry " +
                                    std::to_string(worst) + " at row " + std::to_string(br + 1) +
                                    " col " + std::to_string(bc + 1));
    }

    std::optional<HadamardMatrix> f;
    if (hadamard != "fourier") f.emplace(read_matrix_file(hadamard));
    const ContradiagResult result = contradiagonalize(h, f);
    const double f_max = (h * h).trace().real() -
                         std::pow(h.trace().real(), 2) / static_cast<double>(h.rows());
    const bool pass = std::abs(result.offdiag - f_max) <= 1e-8;

    Dataset data;
    data.records.push_back(Record{
        {"record", std::string("metric")}, {"name", std::string("f")}, {"value", result.offdiag}});
    data.records.push_back(Record{
        {"record", std::string("metric")}, {"name", std::string("f_max")}, {"value", f_max}});
    data.records.push_back(
        Record{{"record", std::string("flag")}, {"name", std::string("pass")}, {"pass", pass}});
    append_matrix_records(data.records, "A", result.transformed);
    append_matrix_records(data.records, "U_max", result.u_max);

    data.manifest = {"contradiag",
                     Record{{"input", input},
                            {"hadamard", hadamard},
                            {"format", std::string(format == RecordFormat::csv ? "csv" : "jsonl")}},
                     0,
                     kVersion,
                     timer.seconds()};
    write_dataset(out, data, format,
                  {"record", "name", "row", "col", "re", "im", "value", "pass"});
    std::cout << "f = " << result.offdiag << ", analytic max = " << f_max
              << (pass ? " [pass]" : " [FAIL]") << "; wrote " << out << "\n";
    return pass ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out,
               RecordFormat format) {
    Timer timer;
    const std::vector<CheckResult> results = run_verify_suite(suite, seed);

    Dataset data;
    for (const auto& r : results) {
        data.records.push_back(Record{{"record", std::string("check")},
                                      {"check", r.name},
                                      {"value", r.value},
                                      {"reference", r.reference},
                                      {"margin", r.margin},
                                      {"bound", r.bound},
                                      {"pass", r.pass}});
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (margin " << r.margin
                  << ", bound " << r.bound << ")\n";
    }
    const bool ok = all_passed(results);
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << " [" << results.size()
              << " checks]\n";

    if (!out.empty()) {
        data.manifest = {"verify", Record{{"suite", suite},
                                          {"format", std::string(format == RecordFormat::csv
                                                                     ? "csv"
                                                                     : "jsonl")}},
                         seed, kVersion, timer.seconds()};
        write_dataset(out, data, format,
                      {"record", "check", "value", "reference", "margin", "bound", "pass"});
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unimodular-ensemble toolkit: random diagonal gates, operator Schmidt "
                 "spectra, exact moments and entropies, contradiagonal states"};
    app.require_subcommand(1);

    std::string kind = "unimodular", out, format_name = "jsonl", suite = "all";
    std::string input, hadamard = "fourier";
    std::int64_t n = 2, samples = 1000;
    int n_max = 7, bins = 100;
    double q = 1.0;
    std::uint64_t seed = default_seed();

    auto* sample = app.add_subcommand("sample", "draw ensemble samples and write per-sample records");
    sample->add_option("--kind", kind,
                       "unimodular | ginibre | hilbert_schmidt_state | diagonal_gate | "
                       "haar_pure_state");
    sample->add_option("--n", n, "dimension N");
    sample->add_option("--samples", samples, "number of samples");
    sample->add_option("--seed", seed, "RNG seed (default: UNIMOD_SEED or 0)");
    sample->add_option("--out", out, "output file")->required();
    sample->add_option("--format", format_name, "jsonl | csv");
    sample->add_option("--bins", bins, "histogram bin count for the scalar series (0 disables, default 100)");
    sample->add_option("--q", q, "Rényi order for gate entropy records");

    auto* moments = app.add_subcommand("moments", "moment table: analytic vs Monte Carlo");
    moments->add_option("--n", n, "dimension N");
    moments->add_option("--n-max", n_max, "largest moment order (<= 12)");
    moments->add_option("--samples", samples, "Monte Carlo samples");
    moments->add_option("--seed", seed, "RNG seed");
    moments->add_option("--out", out, "output file")->required();
    moments->add_option("--format", format_name, "jsonl | csv");

    auto* entropy = app.add_subcommand("entropy", "mean entanglement entropy report");
    entropy->add_option("--n", n, "dimension N");
    entropy->add_option("--samples", samples, "Monte Carlo samples");
    entropy->add_option("--seed", seed, "RNG seed");
    entropy->add_option("--out", out, "output file")->required();
    entropy->add_option("--format", format_name, "jsonl | csv");

    auto* contradiag = app.add_subcommand("contradiag", "contra-diagonalize a Hermitian matrix");
    contradiag->add_option("--input", input, "matrix file (header N, rows of re+imj)")->required();
    contradiag->add_option("--hadamard", hadamard, "'fourier' or a Hadamard matrix file");
    contradiag->add_option("--out", out, "output file")->required();
    contradiag->add_option("--format", format_name, "jsonl | csv");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "moments | entropy | schmidt | contradiag | epower | combinatorics | all");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--out", out, "optional results file");
    verify->add_option("--format", format_name, "jsonl | csv");

    try {
        app.parse(argc, argv);
        const RecordFormat format = record_format_from_string(format_name);
        if (sample->parsed())
            return cmd_sample(ensemble_kind_from_string(kind), n, samples, seed, out, format, bins,
                              q);
        if (moments->parsed()) return cmd_moments(n, n_max, samples, seed, out, format);
        if (entropy->parsed()) return cmd_entropy(n, samples, seed, out, format);
        if (contradiag->parsed()) return cmd_contradiag(input, hadamard, out, format);
        if (verify->parsed()) return cmd_verify(suite, seed, out, format);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2; // --help and --version exit cleanly
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
