#include "unimod/contradiag.hpp"

#include "unimod/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace unimod {

HadamardMatrix::HadamardMatrix(CMat f) : mat_(std::move(f)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
        throw std::invalid_argument("HadamardMatrix: matrix must be square and nonempty");
    if (!is_unitary(mat_, 1e-10))
        throw std::invalid_argument("HadamardMatrix: not unitary within 1e-10");
    const double target = 1.0 / std::sqrt(static_cast<double>(mat_.rows()));
    if (((mat_.cwiseAbs().array() - target).abs() > 1e-10).any())
        throw std::invalid_argument("HadamardMatrix: entries must have modulus 1/sqrt(N)");
}

HadamardMatrix fourier_matrix(Eigen::Index n) {
    if (n < 1) throw std::invalid_argument("fourier_matrix: order must be positive");
    CMat f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) /
                             static_cast<double>(n);
            f(j, k) = scale * Complex(std::cos(t), std::sin(t));
        }
    return HadamardMatrix(std::move(f));
}

namespace {

void check_permutation(const std::vector<Eigen::Index>& perm, Eigen::Index n, const char* side) {
    if (static_cast<Eigen::Index>(perm.size()) != n)
        throw std::invalid_argument(std::string("enphase: ") + side + " permutation has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Eigen::Index p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument(std::string("enphase: ") + side +
                                        " permutation is not a bijection");
        seen[static_cast<std::size_t>(p)] = true;
    }
}

CMat permutation_matrix(const std::vector<Eigen::Index>& perm) {
    const auto n = static_cast<Eigen::Index>(perm.size());
    CMat p = CMat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) p(perm[static_cast<std::size_t>(i)], i) = 1.0;
    return p;
}

CMat phase_diagonal(const RVec& phases) {
    CMat e = CMat::Zero(phases.size(), phases.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        e(i, i) = Complex(std::cos(phases[i]), std::sin(phases[i]));
    return e;
}

} // namespace

HadamardMatrix enphase(const HadamardMatrix& f, const RVec& left_phases, const RVec& right_phases,
                       const std::vector<Eigen::Index>& left_perm,
                       const std::vector<Eigen::Index>& right_perm) {
    const Eigen::Index n = f.order();
    if (left_phases.size() != n || right_phases.size() != n)
        throw std::invalid_argument("enphase: phase vectors must have length N");
    check_permutation(left_perm, n, "left");
    check_permutation(right_perm, n, "right");
    CMat g = permutation_matrix(left_perm) * phase_diagonal(left_phases) * f.mat() *
             phase_diagonal(right_phases) * permutation_matrix(right_perm);
    return HadamardMatrix(std::move(g));
}

double offdiag_weight(const CMat& g) {
    if (!is_hermitian(g))
        throw std::invalid_argument("offdiag_weight: matrix must be Hermitian");
    return g.squaredNorm() - g.diagonal().cwiseAbs2().sum();
}

ContradiagResult contradiagonalize(const CMat& h, const std::optional<HadamardMatrix>& f) {
    if (!is_hermitian(h))
        throw std::invalid_argument("contradiagonalize: matrix must be Hermitian");
    const Eigen::Index n = h.rows();
    const HadamardMatrix& had = f ? *f : fourier_matrix(n);
    if (had.order() != n)
        throw std::invalid_argument("contradiagonalize: Hadamard order mismatch");
    const HermitianEig eig = eig_hermitian(h);
    ContradiagResult out;
    out.u_max = had.mat() * eig.vectors.adjoint();
    CMat a = out.u_max * h * out.u_max.adjoint();
    a = (a + a.adjoint()) / 2.0;
    out.offdiag = offdiag_weight(a);
    out.transformed = std::move(a);
    return out;
}

double max_orbit_distance(const CMat& d) {
    if (d.rows() != d.cols() || d.rows() < 1)
        throw std::invalid_argument("max_orbit_distance: matrix must be square");
    for (Eigen::Index r = 0; r < d.rows(); ++r)
        for (Eigen::Index c = 0; c < d.cols(); ++c) {
            if (r != c && std::abs(d(r, c)) > 1e-12)
                throw std::invalid_argument("max_orbit_distance: matrix must be diagonal");
            if (r == c && std::abs(d(r, c).imag()) > 1e-12)
                throw std::invalid_argument("max_orbit_distance: diagonal must be real");
        }
    const RVec diag = d.diagonal().real();
    const double tr = diag.sum();
    return 2.0 * (diag.squaredNorm() - tr * tr / static_cast<double>(d.rows()));
}

bool majorization_chain_check(const DensityMatrix& sigma, const CMat& u) {
    const Eigen::Index n = sigma.order();
    const double flat = 1.0 / static_cast<double>(n);
    if ((sigma.mat().diagonal().real().array() - flat).abs().maxCoeff() > 1e-9 ||
        sigma.mat().diagonal().imag().cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("majorization_chain_check: state is not contradiagonal");
    if (u.rows() != n || !is_unitary(u))
        throw std::invalid_argument("majorization_chain_check: basis is not unitary of order N");
    const RVec rotated = (u * sigma.mat() * u.adjoint()).diagonal().real();
    const RVec eigenvalues = sigma.eigenvalues().values();
    return majorizes(rotated, sigma.mat().diagonal().real()) && majorizes(eigenvalues, rotated);
}

CMat prescribe_diagonal(const CMat& h, const RVec& x) {
    if (!is_hermitian(h))
        throw std::invalid_argument("prescribe_diagonal: matrix must be Hermitian");
    const Eigen::Index n = h.rows();
    if (x.size() != n)
        throw std::invalid_argument("prescribe_diagonal: target length mismatch");
    const HermitianEig eig = eig_hermitian(h);
    if (!majorizes(eig.values, x))
        throw std::domain_error("prescribe_diagonal: target is not majorized by the spectrum");

    // Work on the diagonalized matrix. Targets are matched smallest-first:
    // each step rotates in the plane of the two active values straddling the
    // target, which freezes one diagonal entry and leaves the rest diagonal.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&x](Eigen::Index a, Eigen::Index b) { return x[a] < x[b]; });

    struct Active {
        double value;
        Eigen::Index position;
    };
    std::vector<Active> active;
    for (Eigen::Index k = 0; k < n; ++k) active.push_back({eig.values[k], k});

    CMat rotations = CMat::Identity(n, n);
    std::vector<Eigen::Index> slot_of_target(static_cast<std::size_t>(n));
    for (std::size_t step = 0; step < order.size(); ++step) {
        const double target = x[order[step]];
        if (active.size() == 1) {
            slot_of_target[step] = active[0].position;
            break;
        }
        // Largest active value <= target; falls back to the smallest value
        // when rounding leaves the target marginally below all of them.
        std::size_t lo = active.size(), hi = active.size();
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (active[i].value <= target && (lo == active.size() || active[i].value > active[lo].value))
                lo = i;
            if (active[i].value >= target && (hi == active.size() || active[i].value < active[hi].value))
                hi = i;
        }
        if (lo == active.size()) lo = static_cast<std::size_t>(std::min_element(
                                          active.begin(), active.end(),
                                          [](const Active& a, const Active& b) { return a.value < b.value; }) -
                                      active.begin());
        if (hi == active.size()) hi = static_cast<std::size_t>(std::max_element(
                                          active.begin(), active.end(),
                                          [](const Active& a, const Active& b) { return a.value < b.value; }) -
                                      active.begin());
        if (lo == hi || std::abs(active[lo].value - target) <= 1e-14) {
            slot_of_target[step] = active[lo].position;
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(lo));
            continue;
        }
        const double va = active[lo].value, vb = active[hi].value;
        const double c2 = std::clamp((vb - target) / (vb - va), 0.0, 1.0);
        const double c = std::sqrt(c2), s = std::sqrt(1.0 - c2);
        const Eigen::Index pa = active[lo].position, pb = active[hi].position;
        // Givens rotation in the (pa, pb) coordinate plane.
        for (Eigen::Index col = 0; col < n; ++col) {
            const Complex ra = rotations(pa, col), rb = rotations(pb, col);
            rotations(pa, col) = c * ra + s * rb;
            rotations(pb, col) = -s * ra + c * rb;
        }
        slot_of_target[step] = pa;
        active[hi].value = va + vb - target;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(lo));
    }

    // Route each frozen slot to the position the caller asked for.
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    for (std::size_t step = 0; step < order.size(); ++step)
        perm[static_cast<std::size_t>(slot_of_target[step])] = order[step];
    CMat p = CMat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) p(perm[static_cast<std::size_t>(i)], i) = 1.0;

    return p * rotations * eig.vectors.adjoint();
}

double measurement_entropy(const DensityMatrix& rho, const CMat& basis) {
    if (basis.rows() != rho.order() || !is_unitary(basis))
        throw std::invalid_argument("measurement_entropy: basis must be unitary of matching order");
    RVec p = (basis * rho.mat() * basis.adjoint()).diagonal().real();
    for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = std::max(p[i], 0.0);
    p /= p.sum();
    return detail::entropy_of(p);
}

} // namespace unimod
