#include "mubcoh/bounds.hpp"

#include <cmath>
#include <string>

#include "mubcoh/errors.hpp"

namespace mubcoh {

void Povm::validate() const {
    if (elements.empty()) throw BadDimension("Povm: no elements");
    const int d = dim();
    CMat sum = CMat::Zero(d, d);
    for (const CMat& a : elements) {
        if (a.rows() != d || a.cols() != d) {
            throw DimensionMismatch("Povm: element shape disagrees with dim " + std::to_string(d));
        }
        const Spectrum s = hermitian_eig(a);
        if (s.eigenvalues.minCoeff() < -1e-10) {
            throw DomainError("Povm: element eigenvalue " +
                              std::to_string(s.eigenvalues.minCoeff()) + " below -1e-10");
        }
        sum += a;
    }
    const double dev = (sum - CMat::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > 1e-9) {
        throw DomainError("Povm: completeness deviation " + std::to_string(dev));
    }
}

Povm povm_from_basis(const Basis& basis) {
    Povm out;
    const int d = basis.dim();
    out.elements.reserve(d);
    for (int i = 0; i < d; ++i) {
        out.elements.push_back(basis.vectors.col(i) * basis.vectors.col(i).adjoint());
    }
    return out;
}

void MubBoundParams::validate() const {
    if (d < 2) throw DomainError("MubBoundParams: d must be >= 2");
    if (M < 1) throw DomainError("MubBoundParams: M must be >= 1");
    const double band = 1e-9;
    if (purity < 1.0 / d - band || purity > 1.0 + band) {
        throw DomainError("MubBoundParams: purity " + std::to_string(purity) +
                          " outside [1/d, 1]");
    }
    if (entropy < -band || entropy > std::log(static_cast<double>(d)) + band) {
        throw DomainError("MubBoundParams: entropy " + std::to_string(entropy) +
                          " outside [0, ln d]");
    }
}

double prop1_rhs(const MubBoundParams& p) {
    p.validate();
    return std::log(static_cast<double>(p.M) * p.d / (p.purity * p.d + p.M - 1)) - p.entropy;
}

double prop1_pure_rhs(int d, int m) {
    return prop1_rhs(MubBoundParams{d, m, 1.0, 0.0});
}

double pati_mub_rhs(int d, int m) {
    if (d < 2) throw DomainError("pati_mub_rhs: d must be >= 2");
    if (m < 1) throw DomainError("pati_mub_rhs: M must be >= 1");
    return std::log(static_cast<double>(d)) / m;
}

double prop2_rhs(const MubBoundParams& p) {
    p.validate();
    const double d = p.d, m = p.M;
    const double radicand = m * d - 1.0 - (m * d - d) * p.purity;
    if (radicand < -1e-10) {
        throw NegativeRadicand("prop2_rhs: radicand " + std::to_string(radicand));
    }
    return (d - 1.0) / d -
           std::sqrt(d - 1.0) / (d * std::sqrt(m)) * std::sqrt(std::max(radicand, 0.0));
}

double prop2_pure_rhs(int d, int m) {
    return prop2_rhs(MubBoundParams{d, m, 1.0, 0.0});
}

double prop2_pure_lp_rhs(int d, int m) {
    if (d < 2) throw DomainError("prop2_pure_lp_rhs: d must be >= 2");
    if (m < 1) throw DomainError("prop2_pure_lp_rhs: M must be >= 1");
    const double mm = m;
    return 1.0 - (1.0 + std::sqrt((mm * mm - mm) / d)) / mm;
}

double maxprob_sum_rhs(int d, int m) {
    if (d < 2) throw DomainError("maxprob_sum_rhs: d must be >= 2");
    if (m < 1) throw DomainError("maxprob_sum_rhs: M must be >= 1");
    const double mm = m;
    return 1.0 + std::sqrt((mm * mm - mm) / d);
}

double mim6_rhs(const std::vector<Povm>& povms, const std::vector<int>& indices) {
    if (povms.empty()) throw BadDimension("mim6_rhs: no measurements");
    if (indices.size() != povms.size()) {
        throw DimensionMismatch("mim6_rhs: " + std::to_string(indices.size()) +
                                " indices for " + std::to_string(povms.size()) + " measurements");
    }
    const int d = povms[0].dim();
    std::vector<CMat> roots;
    roots.reserve(povms.size());
    for (std::size_t t = 0; t < povms.size(); ++t) {
        if (povms[t].dim() != d) {
            throw DimensionMismatch("mim6_rhs: measurement " + std::to_string(t) +
                                    " has dim " + std::to_string(povms[t].dim()));
        }
        if (indices[t] < 0 || indices[t] >= static_cast<int>(povms[t].elements.size())) {
            throw BadIndex("mim6_rhs: index " + std::to_string(indices[t]) +
                           " for measurement " + std::to_string(t));
        }
        roots.push_back(hermitian_sqrt(povms[t].elements[indices[t]]));
    }
    double cross = 0.0;
    for (std::size_t s = 0; s < roots.size(); ++s) {
        for (std::size_t t = 0; t < roots.size(); ++t) {
            if (s == t) continue;
            const double norm = norms(roots[s] * roots[t]).spectral_norm;
            cross += norm * norm;
        }
    }
    return 1.0 + std::sqrt(cross);
}

std::pair<double, double> ic_sum_rhs(int d, int m, double purity) {
    if (d < 2) throw DomainError("ic_sum_rhs: d must be >= 2");
    if (m < 1) throw DomainError("ic_sum_rhs: M must be >= 1");
    const double shift = static_cast<double>(m - 1) / d;
    return {purity + shift, 1.0 + shift};
}

double prop3_rhs(int d, int m) {
    if (d < 2) throw DomainError("prop3_rhs: d must be >= 2");
    if (m < 1) throw DomainError("prop3_rhs: M must be >= 1");
    const double sd = std::sqrt(static_cast<double>(d));
    const double mm = m;
    return std::log(mm * sd / (sd + std::sqrt(mm * mm - mm)));
}

double rmub12_rhs(int d, int m) {
    if (d < 2) throw DomainError("rmub12_rhs: d must be >= 2");
    if (m < 1) throw DomainError("rmub12_rhs: M must be >= 1");
    return std::log(std::sqrt(static_cast<double>(m)) * d / (d + std::sqrt(static_cast<double>(m)) - 1.0));
}

namespace {

BoundReport make_report(const std::string& bound_id, double lhs, double rhs, double slack,
                        double tol, const MubBoundParams& p, const std::string& state_label) {
    BoundReport r;
    r.bound_id = bound_id;
    r.d = p.d;
    r.M = p.M;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = slack;
    r.purity = p.purity;
    r.entropy = p.entropy;
    r.state_label = state_label;
    r.holds = slack >= -tol;
    return r;
}

}  // namespace

BoundReport check_lower_bound(const std::string& bound_id, double lhs, double rhs, double tol,
                              const MubBoundParams& p, const std::string& state_label) {
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
        throw DomainError("check_lower_bound: non-finite value for " + bound_id);
    }
    return make_report(bound_id, lhs, rhs, lhs - rhs, tol, p, state_label);
}

BoundReport check_upper_bound(const std::string& bound_id, double lhs, double rhs, double tol,
                              const MubBoundParams& p, const std::string& state_label) {
    if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
        throw DomainError("check_upper_bound: non-finite value for " + bound_id);
    }
    return make_report(bound_id, lhs, rhs, rhs - lhs, tol, p, state_label);
}

}  // namespace mubcoh
