#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace mubcoh {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Default absolute tolerance for ||A - A^dag||_max before an input is
// rejected as non-Hermitian. Inputs within it are symmetrized.
inline constexpr double kHermiticityTol = 1e-9;

// Eigenvalues below kZeroCutoffRel * max|lambda| count as numerical zeros
// when testing range conditions.
inline constexpr double kZeroCutoffRel = 1e-12;

// Eigendecomposition of a Hermitian operator. Eigenvalues ascending,
// eigenvector columns orthonormal.
struct Spectrum {
    RVec eigenvalues;
    CMat eigenvectors;

    // V f(Lambda) V^dag without re-decomposing.
    CMat apply(const std::function<double(double)>& f) const;
};

struct Norms {
    double trace_norm;
    double spectral_norm;
};

// Symmetrizes A as (A + A^dag)/2 and decomposes. Throws NotHermitian if the
// max-entry deviation from A^dag exceeds hermiticity_tol, BadDimension for
// an empty matrix.
Spectrum hermitian_eig(const CMat& a, double hermiticity_tol = kHermiticityTol);

// V f(Lambda) V^dag for Hermitian A. The generic form maps eigenvalues
// through f unchecked; domain handling for sqrt/log lives in the wrappers
// and call sites that know the function.
CMat apply_spectral_function(const CMat& a, const std::function<double(double)>& f,
                             double hermiticity_tol = kHermiticityTol);

// Operator square root of a PSD-up-to-noise Hermitian matrix. Eigenvalues in
// [-neg_band, 0) are clamped to 0; below -neg_band throws DomainError.
// neg_band defaults to the density-matrix PSD tolerance.
CMat hermitian_sqrt(const CMat& a, double neg_band = 1e-10);

// Trace norm (sum of singular values) and spectral norm (largest singular
// value). Singular values are the nonnegative square roots of the Hermitian
// eigenvalues of X^dag X.
Norms norms(const CMat& x);

// Singular values of X, descending.
RVec singular_values(const CMat& x);

}  // namespace mubcoh
