#include "mubcoh/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mubcoh/errors.hpp"

namespace mubcoh {

CMat Spectrum::apply(const std::function<double(double)>& f) const {
    const auto d = eigenvalues.size();
    RVec mapped(d);
    for (Eigen::Index i = 0; i < d; ++i) mapped[i] = f(eigenvalues[i]);
    return eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
}

Spectrum hermitian_eig(const CMat& a, double hermiticity_tol) {
    if (a.rows() == 0 || a.cols() == 0) {
        throw BadDimension("hermitian_eig: empty matrix");
    }
    if (a.rows() != a.cols()) {
        throw BadDimension("hermitian_eig: matrix is " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()) + ", expected square");
    }
    const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (dev > hermiticity_tol) {
        throw NotHermitian("max-entry deviation from adjoint is " + std::to_string(dev));
    }
    const CMat sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eig: eigensolver failed to converge");
    }
    return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

CMat apply_spectral_function(const CMat& a, const std::function<double(double)>& f,
                             double hermiticity_tol) {
    return hermitian_eig(a, hermiticity_tol).apply(f);
}

CMat hermitian_sqrt(const CMat& a, double neg_band) {
    Spectrum spec = hermitian_eig(a);
    const double min_eig = spec.eigenvalues.minCoeff();
    if (min_eig < -neg_band) {
        throw DomainError("hermitian_sqrt: eigenvalue " + std::to_string(min_eig) +
                          " below -" + std::to_string(neg_band));
    }
    return spec.apply([](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

RVec singular_values(const CMat& x) {
    if (x.rows() != x.cols()) {
        throw BadDimension("singular_values: matrix must be square");
    }
    const CMat gram = x.adjoint() * x;
    Eigen::SelfAdjointEigenSolver<CMat> solver(gram);
    if (solver.info() != Eigen::Success) {
        throw Error("singular_values: eigensolver failed to converge");
    }
    RVec sv = solver.eigenvalues();
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        sv[i] = sv[i] > 0.0 ? std::sqrt(sv[i]) : 0.0;
    }
    std::reverse(sv.begin(), sv.end());
    return sv;
}

Norms norms(const CMat& x) {
    if (!x.allFinite()) {
        throw DomainError("norms: non-finite entries");
    }
    const RVec sv = singular_values(x);
    return Norms{sv.sum(), sv.size() > 0 ? sv[0] : 0.0};
}

}  // namespace mubcoh
