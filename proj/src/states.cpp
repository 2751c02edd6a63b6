#include "mubcoh/states.hpp"

#include <cmath>
#include <string>

#include "mubcoh/errors.hpp"
#include "mubcoh/rng.hpp"

namespace mubcoh {

PureState::PureState(CVec amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 1) {
        throw BadDimension("PureState: empty amplitude vector");
    }
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > 1e-12) {
        throw DomainError("PureState: norm " + std::to_string(norm) + " differs from 1");
    }
}

DensityMatrix::DensityMatrix(CMat matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
        throw BadDimension("DensityMatrix: matrix must be square and nonempty");
    }
    const double herm_dev = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > kHermTol) {
        throw NotHermitian("DensityMatrix: deviation " + std::to_string(herm_dev));
    }
    const double trace_dev = std::abs(matrix_.trace().real() - 1.0) + std::abs(matrix_.trace().imag());
    if (trace_dev > kTraceTol) {
        throw DomainError("DensityMatrix: trace deviates from 1 by " + std::to_string(trace_dev));
    }
    const Spectrum spec = hermitian_eig(matrix_, kHermTol);
    if (spec.eigenvalues.minCoeff() < kEigFloor) {
        throw DomainError("DensityMatrix: eigenvalue " + std::to_string(spec.eigenvalues.minCoeff()) +
                          " below PSD floor");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    const CVec& v = psi.amplitudes();
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
    if (d < 1) throw BadDimension("maximally_mixed: d must be >= 1");
    return DensityMatrix(CMat::Identity(d, d) / static_cast<double>(d));
}

double purity(const DensityMatrix& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const Spectrum spec = hermitian_eig(rho.matrix(), DensityMatrix::kHermTol);
    double s = 0.0;
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
        const double lam = spec.eigenvalues[i];
        if (lam > 0.0) s -= lam * std::log(lam);
    }
    return s < 0.0 ? 0.0 : s;
}

namespace {

CMat ginibre(int rows, int cols, RandomStream& rng) {
    CMat g(rows, cols);
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) {
            g(r, c) = Complex(rng.gaussian(), rng.gaussian());
        }
    }
    return g;
}

}  // namespace

PureState sample_pure(int d, std::uint64_t seed) {
    if (d < 2) throw BadDimension("sample_pure: d must be >= 2");
    RandomStream rng(seed);
    CVec v(d);
    for (int i = 0; i < d; ++i) v[i] = Complex(rng.gaussian(), rng.gaussian());
    v /= v.norm();
    // one more exact normalization pass so the 1e-12 invariant is met bit-for-bit
    v /= v.norm();
    return PureState(std::move(v));
}

DensityMatrix sample_density(int d, int rank, std::uint64_t seed) {
    if (d < 2) throw BadDimension("sample_density: d must be >= 2");
    if (rank < 1 || rank > d) {
        throw BadRank("sample_density: rank " + std::to_string(rank) + " outside [1, " +
                      std::to_string(d) + "]");
    }
    RandomStream rng(seed);
    const CMat g = ginibre(d, rank, rng);
    CMat rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(std::move(rho));
}

CMat sample_unitary(int d, std::uint64_t seed) {
    if (d < 1) throw BadDimension("sample_unitary: d must be >= 1");
    RandomStream rng(seed);
    const CMat g = ginibre(d, d, rng);
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i) {
        const Complex rii = r(i, i);
        const double mag = std::abs(rii);
        q.col(i) *= mag > 0.0 ? rii / mag : Complex(1.0, 0.0);
    }
    return q;
}

}  // namespace mubcoh
