#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace unimod {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double positivity = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double reconstruction = 1e-9;
inline constexpr double rank = 1e-10;
inline constexpr double unitarity = 1e-9;
} // namespace tol

bool all_finite(const CMat& m);
bool is_hermitian(const CMat& m, double eps = tol::hermitian);
bool is_unitary(const CMat& m, double eps = tol::unitarity);

/// Nonincreasing, nonnegative vector summing to one. Entries are sorted on
/// construction; values in [-1e-10, 0) are clipped to zero.
class ProbabilitySpectrum {
  public:
    explicit ProbabilitySpectrum(RVec values);

    /// Rescales an arbitrary nonnegative vector by its sum first.
    static ProbabilitySpectrum normalized(RVec values);

    const RVec& values() const { return values_; }
    Eigen::Index size() const { return values_.size(); }
    double operator[](Eigen::Index k) const { return values_[k]; }

  private:
    RVec values_;
};

/// Hermitian, unit-trace matrix. Positivity of the spectrum is enforced
/// where eigenvalues are actually computed (see eigenvalues()).
class DensityMatrix {
  public:
    explicit DensityMatrix(CMat rho);

    Eigen::Index order() const { return mat_.rows(); }
    const CMat& mat() const { return mat_; }

    /// Eigenvalues as a probability vector; rejects spectra below -1e-10.
    ProbabilitySpectrum eigenvalues() const;

  private:
    CMat mat_;
};

/// Square operator on a tensor-product space with declared factor
/// dimensions (dim_a, dim_b); the composite row index <mn> runs
/// lexicographically with m over the first factor.
class BipartiteOperator {
  public:
    BipartiteOperator(CMat mat, Eigen::Index dim_a, Eigen::Index dim_b);

    Eigen::Index dim_a() const { return dim_a_; }
    Eigen::Index dim_b() const { return dim_b_; }
    Eigen::Index order() const { return mat_.rows(); }
    const CMat& mat() const { return mat_; }

  private:
    CMat mat_;
    Eigen::Index dim_a_;
    Eigen::Index dim_b_;
};

} // namespace unimod
