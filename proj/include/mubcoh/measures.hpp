#pragma once

#include <cstdint>

#include "mubcoh/mub.hpp"
#include "mubcoh/numerics.hpp"
#include "mubcoh/states.hpp"

namespace mubcoh {

// Measurement outcome distribution. Entries in [-1e-12, 0) are clamped to 0
// on construction and the vector is renormalized; the raw sum must already
// be within 1e-10 of 1.
class ProbDist {
public:
    explicit ProbDist(RVec probabilities);

    int dim() const { return static_cast<int>(p_.size()); }
    const RVec& values() const { return p_; }
    double operator[](int i) const { return p_[i]; }
    double max() const { return p_.maxCoeff(); }

private:
    RVec p_;
};

// p_i = <b_i|rho|b_i>. Throws DomainError if the diagonal picks up imaginary
// residue beyond 1e-10.
ProbDist probabilities(const Basis& basis, const DensityMatrix& rho);
ProbDist probabilities(const Basis& basis, const PureState& psi);

// H_1(p) = -sum p_i ln p_i, natural log.
double shannon_entropy(const ProbDist& p);

// H_inf(p) = -ln max_i p_i.
double min_entropy(const ProbDist& p);

// J(p) = sum p_i^2.
double index_of_coincidence(const ProbDist& p);

// D_1(rho||omega) = tr(rho ln rho - rho ln omega) when ran(rho) is contained
// in ran(omega); +infinity otherwise. The range test projects rho onto the
// numerical null space of omega and compares the weight against 1e-8.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& omega);

// C_1(B|rho) = H_1(B|rho) - S_1(rho), clamped to 0 from the [-1e-9, 0) band.
double rel_entropy_coherence(const Basis& basis, const DensityMatrix& rho);

// Jozsa fidelity (||sqrt(rho) sqrt(omega)||_1)^2, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& omega);

// C_g(B|psi) = 1 - max_i |<b_i|psi>|^2.
double geometric_coherence_pure(const Basis& basis, const PureState& psi);

struct GeomBounds {
    double lower = 0.0;      // clamped to >= 0
    double lower_raw = 0.0;  // before clamping; can dip negative when J > tr(rho^2)
    double upper = 0.0;      // 1 - max_i p_i
};

// Two-sided sandwich on the mixed-state geometric coherence from the index
// of coincidence and purity. Throws NegativeRadicand if the radicand drops
// below -1e-10.
GeomBounds geometric_coherence_bounds(const Basis& basis, const DensityMatrix& rho);

// The sandwich lower edge from scalars alone; raw (unclamped) value.
double geom_lower_from_ioc(int d, double ioc, double purity);

struct GeomNumericOptions {
    int starts = 32;
    int max_iters = 10000;
    double tol = 1e-10;
    std::uint64_t seed = 0x9E3779B97F4A7C15ULL;
};

struct GeomNumeric {
    double value = 0.0;
    bool converged = false;
};

// Heuristic value for C_g(B|rho) = 1 - max over incoherent delta of
// F(rho, delta): projected-gradient ascent of delta -> F over the
// probability simplex with central-difference gradients, best over multiple
// starts. The ascent can only undershoot the fidelity maximum, so the value
// is an upper estimate of the true C_g. Non-convergence is reported through
// the flag, not an error.
GeomNumeric geometric_coherence_numeric(const Basis& basis, const DensityMatrix& rho,
                                        const GeomNumericOptions& opts = {});

}  // namespace mubcoh
