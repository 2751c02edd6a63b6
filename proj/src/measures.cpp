#include "mubcoh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "mubcoh/errors.hpp"
#include "mubcoh/rng.hpp"

namespace mubcoh {

namespace {

void require_same_dim(int a, int b, const char* where) {
    if (a != b) {
        throw DimensionMismatch(std::string(where) + ": " + std::to_string(a) + " vs " +
                                std::to_string(b));
    }
}

}  // namespace

ProbDist::ProbDist(RVec probabilities) : p_(std::move(probabilities)) {
    if (p_.size() < 1) throw BadDimension("ProbDist: empty vector");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < p_.size(); ++i) {
        if (p_[i] < -1e-12) {
            throw DomainError("ProbDist: entry " + std::to_string(p_[i]) + " below -1e-12");
        }
        if (p_[i] < 0.0) p_[i] = 0.0;
        sum += p_[i];
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw DomainError("ProbDist: sum " + std::to_string(sum) + " deviates from 1");
    }
    p_ /= sum;
}

ProbDist probabilities(const Basis& basis, const DensityMatrix& rho) {
    require_same_dim(basis.dim(), rho.dim(), "probabilities");
    const CVec diag = (basis.vectors.adjoint() * rho.matrix() * basis.vectors).diagonal();
    const double imag_residue = diag.imag().cwiseAbs().maxCoeff();
    if (imag_residue > 1e-10) {
        throw DomainError("probabilities: imaginary residue " + std::to_string(imag_residue));
    }
    return ProbDist(diag.real());
}

ProbDist probabilities(const Basis& basis, const PureState& psi) {
    require_same_dim(basis.dim(), psi.dim(), "probabilities");
    return ProbDist((basis.vectors.adjoint() * psi.amplitudes()).cwiseAbs2());
}

double shannon_entropy(const ProbDist& p) {
    double h = 0.0;
    for (int i = 0; i < p.dim(); ++i) {
        if (p[i] > 0.0) h -= p[i] * std::log(p[i]);
    }
    return h < 0.0 ? 0.0 : h;
}

double min_entropy(const ProbDist& p) {
    return -std::log(p.max());
}

double index_of_coincidence(const ProbDist& p) {
    return p.values().squaredNorm();
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& omega) {
    require_same_dim(rho.dim(), omega.dim(), "relative_entropy");
    const Spectrum srho = hermitian_eig(rho.matrix(), DensityMatrix::kHermTol);
    const Spectrum somega = hermitian_eig(omega.matrix(), DensityMatrix::kHermTol);

    double tr_rho_ln_rho = 0.0;
    for (Eigen::Index i = 0; i < srho.eigenvalues.size(); ++i) {
        const double lam = srho.eigenvalues[i];
        if (lam > 0.0) tr_rho_ln_rho += lam * std::log(lam);
    }

    const double cutoff = kZeroCutoffRel * somega.eigenvalues.cwiseAbs().maxCoeff();
    double null_weight = 0.0;
    double tr_rho_ln_omega = 0.0;
    for (Eigen::Index j = 0; j < somega.eigenvalues.size(); ++j) {
        const double mu = somega.eigenvalues[j];
        const CVec w = somega.eigenvectors.col(j);
        const double weight = std::max(0.0, (w.adjoint() * rho.matrix() * w)(0).real());
        if (mu <= cutoff) {
            null_weight += weight;
        } else {
            tr_rho_ln_omega += weight * std::log(mu);
        }
    }
    if (null_weight > 1e-8) {
        return std::numeric_limits<double>::infinity();
    }
    return tr_rho_ln_rho - tr_rho_ln_omega;
}

double rel_entropy_coherence(const Basis& basis, const DensityMatrix& rho) {
    require_same_dim(basis.dim(), rho.dim(), "rel_entropy_coherence");
    const double c = shannon_entropy(probabilities(basis, rho)) - von_neumann_entropy(rho);
    return (c < 0.0 && c >= -1e-9) ? 0.0 : c;
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& omega) {
    require_same_dim(rho.dim(), omega.dim(), "fidelity");
    const CMat prod = hermitian_sqrt(rho.matrix()) * hermitian_sqrt(omega.matrix());
    // Jacobi SVD keeps small singular values accurate so F(rho, omega) = F(omega, rho)
    // holds to ~1e-15 even when the product is rank deficient.
    const Eigen::JacobiSVD<CMat> svd(prod);
    const double tn = svd.singularValues().sum();
    return std::clamp(tn * tn, 0.0, 1.0);
}

double geometric_coherence_pure(const Basis& basis, const PureState& psi) {
    require_same_dim(basis.dim(), psi.dim(), "geometric_coherence_pure");
    return 1.0 - (basis.vectors.adjoint() * psi.amplitudes()).cwiseAbs2().maxCoeff();
}

double geom_lower_from_ioc(int d, double ioc, double pur) {
    if (d < 2) throw BadDimension("geom_lower_from_ioc: d must be >= 2");
    const double radicand = 1.0 + static_cast<double>(d) / (d - 1) * (ioc - pur);
    if (radicand < -1e-10) {
        throw NegativeRadicand("geom_lower_from_ioc: radicand " + std::to_string(radicand));
    }
    return static_cast<double>(d - 1) / d * (1.0 - std::sqrt(std::max(radicand, 0.0)));
}

GeomBounds geometric_coherence_bounds(const Basis& basis, const DensityMatrix& rho) {
    require_same_dim(basis.dim(), rho.dim(), "geometric_coherence_bounds");
    const ProbDist p = probabilities(basis, rho);
    GeomBounds out;
    out.lower_raw = geom_lower_from_ioc(basis.dim(), index_of_coincidence(p), purity(rho));
    out.lower = std::max(out.lower_raw, 0.0);
    out.upper = 1.0 - p.max();
    return out;
}

namespace {

// F(rho, delta) as a function of the simplex weights, in the basis frame:
// with G = V^dag rho V and D = diag(sqrt(delta)), the singular values of
// sqrt(rho) sqrt(delta) are the square roots of the eigenvalues of D G D.
double fidelity_on_simplex(const CMat& g, const RVec& delta) {
    RVec s = delta.cwiseMax(0.0).cwiseSqrt();
    const CMat h = s.asDiagonal() * g * s.asDiagonal();
    Eigen::SelfAdjointEigenSolver<CMat> solver(h);
    double tn = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lam = solver.eigenvalues()[i];
        if (lam > 0.0) tn += std::sqrt(lam);
    }
    return tn * tn;
}

// Euclidean projection onto the probability simplex.
RVec project_simplex(const RVec& v) {
    const int d = static_cast<int>(v.size());
    std::vector<double> u(v.data(), v.data() + d);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cumsum = 0.0, tau = 0.0;
    int support = 0;
    for (int k = 0; k < d; ++k) {
        cumsum += u[k];
        const double t = (cumsum - 1.0) / (k + 1);
        if (u[k] - t > 0.0) {
            support = k + 1;
            tau = t;
        }
    }
    (void)support;
    return (v.array() - tau).cwiseMax(0.0);
}

struct AscentResult {
    double best_f = 0.0;
    bool converged = false;
};

AscentResult ascend(const CMat& g, RVec delta, int max_iters, double tol) {
    const int d = static_cast<int>(delta.size());
    const double h = 1e-6;
    double f = fidelity_on_simplex(g, delta);
    double alpha = 1.0;
    for (int iter = 0; iter < max_iters; ++iter) {
        RVec grad(d);
        for (int i = 0; i < d; ++i) {
            RVec up = delta, dn = delta;
            up[i] += h;
            dn[i] -= h;
            grad[i] = (fidelity_on_simplex(g, up) - fidelity_on_simplex(g, dn)) / (2.0 * h);
        }
        grad.array() -= grad.mean();

        bool improved = false;
        RVec next;
        double f_next = f;
        while (alpha >= 1e-14) {
            RVec cand = project_simplex(delta + alpha * grad);
            const double fc = fidelity_on_simplex(g, cand);
            if (fc > f) {
                next = std::move(cand);
                f_next = fc;
                // expand while it keeps paying off
                while (alpha < 1e6) {
                    RVec wide = project_simplex(delta + 2.0 * alpha * grad);
                    const double fw = fidelity_on_simplex(g, wide);
                    if (fw <= f_next) break;
                    alpha *= 2.0;
                    next = std::move(wide);
                    f_next = fw;
                }
                improved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!improved) {
            return AscentResult{f, true};
        }
        const double movement = (next - delta).norm();
        delta = std::move(next);
        f = f_next;
        if (movement < tol) {
            return AscentResult{f, true};
        }
        alpha = std::min(alpha * 2.0, 1e6);
    }
    return AscentResult{f, false};
}

}  // namespace

GeomNumeric geometric_coherence_numeric(const Basis& basis, const DensityMatrix& rho,
                                        const GeomNumericOptions& opts) {
    require_same_dim(basis.dim(), rho.dim(), "geometric_coherence_numeric");
    if (opts.starts < 1) throw DomainError("geometric_coherence_numeric: starts must be >= 1");
    const int d = basis.dim();
    const CMat g = basis.vectors.adjoint() * rho.matrix() * basis.vectors;

    std::vector<RVec> starts;
    starts.reserve(opts.starts + 2);
    starts.push_back(RVec::Constant(d, 1.0 / d));
    // deterministic warm starts: the diagonal weights themselves and the
    // best single-vertex candidate
    RVec diag = g.diagonal().real().cwiseMax(0.0);
    if (diag.sum() > 0.0) starts.push_back(diag / diag.sum());
    int argmax = 0;
    diag.maxCoeff(&argmax);
    starts.push_back(RVec::Unit(d, argmax));
    RandomStream rng(opts.seed);
    while (static_cast<int>(starts.size()) < opts.starts + 2) {
        RVec dir(d);
        for (int i = 0; i < d; ++i) dir[i] = -std::log(rng.uniform());
        starts.push_back(dir / dir.sum());
    }

    GeomNumeric out;
    double best_f = -1.0;
    for (const RVec& s : starts) {
        const AscentResult res = ascend(g, s, opts.max_iters, opts.tol);
        if (res.best_f > best_f) {
            best_f = res.best_f;
            out.converged = res.converged;
        }
    }
    out.value = std::clamp(1.0 - best_f, 0.0, 1.0);
    return out;
}

}  // namespace mubcoh
