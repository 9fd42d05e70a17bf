#include "unimod/contradiag.hpp"
#include "unimod/ensembles.hpp"
#include "unimod/epower.hpp"
#include "unimod/linalg.hpp"
#include "unimod/moments.hpp"
#include "unimod/schmidt.hpp"
#include "unimod/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace unimod;

namespace {

std::string to_str(const BigInt& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

std::string to_str(const BigRat& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

BipartiteOperator as_gate(const CMat& mat, Eigen::Index n) {
    return BipartiteOperator(mat, n, n);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "unimodular-ensemble toolkit: samplers, operator Schmidt spectra, exact "
              "moments/entropies, entangling power, contradiagonal states";

    py::class_<RandomStream>(m, "RandomStream",
                             "Deterministic xoshiro256** stream keyed by (seed, substream)")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("substream") = 0)
        .def("next_u64", &RandomStream::next_u64)
        .def("uniform01", &RandomStream::uniform01)
        .def("phase", &RandomStream::phase)
        .def("complex_normal", &RandomStream::complex_normal)
        .def("normal", &RandomStream::normal);

    // linalg
    m.def("singular_values", &singular_values, py::arg("a"));
    m.def(
        "eig_hermitian",
        [](const CMat& h) {
            const HermitianEig eig = eig_hermitian(h);
            return py::make_tuple(eig.values, eig.vectors);
        },
        py::arg("h"), "Returns (values nonincreasing, eigenvector columns)");
    m.def("majorizes", &majorizes, py::arg("y"), py::arg("x"), py::arg("eps") = 1e-10);
    m.def(
        "shannon_entropy",
        [](RVec p) { return shannon_entropy(ProbabilitySpectrum(std::move(p))); }, py::arg("p"));
    m.def(
        "renyi_entropy",
        [](RVec p, double q) { return renyi_entropy(ProbabilitySpectrum(std::move(p)), q); },
        py::arg("p"), py::arg("q"));

    // ensembles
    m.def("sample_unimodular", &sample_unimodular, py::arg("n"), py::arg("stream"));
    m.def(
        "unimodular_to_state", [](const CMat& a) { return unimodular_to_state(a).mat(); },
        py::arg("a"));
    m.def("sample_ginibre", &sample_ginibre, py::arg("n"), py::arg("stream"));
    m.def(
        "sample_hs_state", [](Eigen::Index n, RandomStream& s) { return sample_hs_state(n, s).mat(); },
        py::arg("n"), py::arg("stream"));
    m.def(
        "sample_diagonal_gate",
        [](Eigen::Index n, RandomStream& s) { return sample_diagonal_gate(n, s).mat(); },
        py::arg("n"), py::arg("stream"));
    m.def(
        "diagonal_gate_to_unimodular",
        [](const CMat& u, Eigen::Index n) { return diagonal_gate_to_unimodular(as_gate(u, n)); },
        py::arg("u"), py::arg("n"));
    m.def("sample_haar_state", &sample_haar_state, py::arg("n"), py::arg("stream"));
    m.def("sample_haar_unitary", &sample_haar_unitary, py::arg("n"), py::arg("stream"));

    // schmidt
    m.def(
        "reshuffle", [](const CMat& x, Eigen::Index n) { return reshuffle(as_gate(x, n)).mat(); },
        py::arg("x"), py::arg("n"));
    m.def(
        "schmidt_spectrum",
        [](const CMat& u, Eigen::Index n) { return schmidt_spectrum(as_gate(u, n)).coefficients; },
        py::arg("u"), py::arg("n"), "Squared singular values of the reshuffled gate");
    m.def(
        "operator_schmidt_decomposition",
        [](const CMat& u, Eigen::Index n, double rank_tol) {
            py::list out;
            for (const auto& t : operator_schmidt_decomposition(as_gate(u, n), rank_tol))
                out.append(py::make_tuple(t.weight, t.factor_a, t.factor_b));
            return out;
        },
        py::arg("u"), py::arg("n"), py::arg("rank_tol") = 1e-10);
    m.def(
        "gate_entanglement_entropy",
        [](const CMat& u, Eigen::Index n, double q) {
            return gate_entanglement_entropy(as_gate(u, n), q);
        },
        py::arg("u"), py::arg("n"), py::arg("q") = 1.0);
    m.def(
        "fourier_gate", [](Eigen::Index order) { return fourier_gate(order).mat(); },
        py::arg("order"));

    // moments (exact values cross the boundary as decimal strings)
    m.def("catalan_number_str", [](std::int64_t k) { return to_str(catalan_number(k)); });
    m.def("catalan_triangle_str",
          [](std::int64_t n, std::int64_t k) { return to_str(catalan_triangle(n, k)); });
    m.def("borel_triangle_str",
          [](std::int64_t n, std::int64_t k) { return to_str(borel_triangle(n, k)); });
    m.def("ue_moment_str", [](std::int64_t n, std::int64_t dim) { return to_str(ue_moment(n, dim)); });
    m.def("ue_moment_scaled_str",
          [](std::int64_t n, std::int64_t dim) { return to_str(ue_moment_scaled_poly(n, dim)); });
    m.def("hs_moment_str", [](std::int64_t n, std::int64_t dim) { return to_str(hs_moment(n, dim)); });
    m.def("arcsine_moment_str", [](std::int64_t n) { return to_str(arcsine_moment(n)); });
    m.def("mp_moment_str", [](std::int64_t n) { return to_str(mp_moment(n)); });
    m.def("ue_cumulants_str", [](std::int64_t dim) {
        std::vector<std::string> out;
        for (const auto& k : ue_cumulants(dim)) out.push_back(to_str(k));
        return out;
    });
    m.def("ue_moment_continued", &ue_moment_continued, py::arg("x"), py::arg("dim"));
    m.def("ue_mean_entropy", &ue_mean_entropy, py::arg("dim"));
    m.def("hs_mean_entropy", &hs_mean_entropy, py::arg("dim"));
    m.def("haar_gate_entropy_reference", &haar_gate_entropy_reference, py::arg("dim"));
    m.def("mp_density", &mp_density, py::arg("x"));
    m.def("arcsine_density", &arcsine_density, py::arg("x"));
    m.def("integrate_mp", &integrate_mp, py::arg("f"), py::arg("rel_tol") = 1e-10);
    m.def("integrate_arcsine", &integrate_arcsine, py::arg("f"), py::arg("rel_tol") = 1e-10);
    m.def("count_doublet_words", &count_doublet_words, py::arg("alphabet"), py::arg("insertions"));

    // contradiag
    m.def(
        "fourier_matrix", [](Eigen::Index n) { return fourier_matrix(n).mat(); }, py::arg("n"));
    m.def(
        "enphase",
        [](const CMat& f, const RVec& lp, const RVec& rp, const std::vector<Eigen::Index>& lperm,
           const std::vector<Eigen::Index>& rperm) {
            return enphase(HadamardMatrix(f), lp, rp, lperm, rperm).mat();
        },
        py::arg("f"), py::arg("left_phases"), py::arg("right_phases"), py::arg("left_perm"),
        py::arg("right_perm"));
    m.def("offdiag_weight", &offdiag_weight, py::arg("g"));
    m.def(
        "contradiagonalize",
        [](const CMat& h, const std::optional<CMat>& f) {
            std::optional<HadamardMatrix> had;
            if (f) had.emplace(*f);
            const ContradiagResult r = contradiagonalize(h, had);
            return py::make_tuple(r.transformed, r.u_max, r.offdiag);
        },
        py::arg("h"), py::arg("f") = py::none(),
        "Returns (A, U_max, achieved off-diagonal weight)");
    m.def("max_orbit_distance", &max_orbit_distance, py::arg("d"));
    m.def(
        "majorization_chain_check",
        [](const CMat& sigma, const CMat& u) {
            return majorization_chain_check(DensityMatrix(sigma), u);
        },
        py::arg("sigma"), py::arg("u"));
    m.def("prescribe_diagonal", &prescribe_diagonal, py::arg("h"), py::arg("x"));
    m.def(
        "measurement_entropy",
        [](const CMat& rho, const CMat& basis) {
            return measurement_entropy(DensityMatrix(rho), basis);
        },
        py::arg("rho"), py::arg("basis"));

    // entangling power
    m.def("linear_entanglement", &linear_entanglement, py::arg("psi"));
    m.def(
        "entangling_power_mc",
        [](const CMat& u, Eigen::Index n, std::int64_t samples, RandomStream& stream) {
            const EpowerReport r = entangling_power_mc(as_gate(u, n), samples, stream);
            return py::make_tuple(r.estimate, r.stderr_, r.samples);
        },
        py::arg("u"), py::arg("n"), py::arg("samples"), py::arg("stream"),
        "Returns (estimate, stderr, samples)");
    m.def(
        "diag_gate_avg_purity",
        [](const CMat& u, Eigen::Index n) { return diag_gate_avg_purity(as_gate(u, n)); },
        py::arg("u"), py::arg("n"));
    m.def("mean_epower_diag", &mean_epower_diag, py::arg("dim"));
    m.def("mean_epower_haar", &mean_epower_haar, py::arg("dim"));

    // verification suites
    m.def(
        "run_verify_suite",
        [](const std::string& suite, std::uint64_t seed) {
            py::list out;
            for (const auto& r : run_verify_suite(suite, seed)) {
                py::dict d;
                d["name"] = r.name;
                d["value"] = r.value;
                d["reference"] = r.reference;
                d["margin"] = r.margin;
                d["bound"] = r.bound;
                d["pass"] = r.pass;
                out.append(d);
            }
            return out;
        },
        py::arg("suite"), py::arg("seed") = 0);

    m.attr("__version__") = "0.1.0";
}
