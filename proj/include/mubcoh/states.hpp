#pragma once

#include <cstdint>

#include "mubcoh/numerics.hpp"

namespace mubcoh {

// Unit-norm state vector. The norm must already be within 1e-12 of 1;
// construction validates, it does not silently renormalize.
class PureState {
public:
    explicit PureState(CVec amplitudes);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const CVec& amplitudes() const { return amplitudes_; }

private:
    CVec amplitudes_;
};

// Density matrix: Hermitian within 1e-9, eigenvalues >= -1e-10, unit trace
// within 1e-10. Stored as given; consumers symmetrize on use.
class DensityMatrix {
public:
    explicit DensityMatrix(CMat matrix);
    static DensityMatrix from_pure(const PureState& psi);
    static DensityMatrix maximally_mixed(int d);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const CMat& matrix() const { return matrix_; }

    static constexpr double kHermTol = 1e-9;
    static constexpr double kEigFloor = -1e-10;
    static constexpr double kTraceTol = 1e-10;

private:
    CMat matrix_;
};

// tr(rho^2).
double purity(const DensityMatrix& rho);

// S_1(rho) = -sum_i lambda_i ln lambda_i, natural log, 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

// Haar-random pure state: d iid standard complex Gaussian amplitudes,
// normalized. Deterministic in (d, seed).
PureState sample_pure(int d, std::uint64_t seed);

// Ginibre-induced random density matrix G G^dag / tr(G G^dag) with G a
// d x rank complex Gaussian matrix. Deterministic in (d, rank, seed).
DensityMatrix sample_density(int d, int rank, std::uint64_t seed);

// Haar-random unitary: QR of a Ginibre matrix with the R diagonal phase
// folded into Q so the triangular factor has positive diagonal.
CMat sample_unitary(int d, std::uint64_t seed);

}  // namespace mubcoh
