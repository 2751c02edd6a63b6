#pragma once

#include <string>
#include <vector>

#include "mubcoh/numerics.hpp"

namespace mubcoh {

// Orthonormal basis of C^d; columns of `vectors` are the kets.
struct Basis {
    CMat vectors;

    int dim() const { return static_cast<int>(vectors.rows()); }
};

// Ordered set of pairwise mutually unbiased bases.
struct MubSet {
    int dim = 0;
    std::vector<Basis> bases;
    std::string label;

    int size() const { return static_cast<int>(bases.size()); }
    // First M bases of the set, label preserved.
    MubSet truncated(int m) const;
};

struct MubVerification {
    double max_ortho_dev = 0.0;    // max |<b_i|b_j> - delta_ij| within any basis
    double max_unbias_dev = 0.0;   // max ||<b_i|b'_j>| - 1/sqrt(d)| across basis pairs
    bool pass = false;
};

// Arithmetic in GF(p^n), p prime. Elements are indexed 0..p^n-1; the base-p
// digits of an index are the coefficients of the representative polynomial,
// constant term first. The modulus is the lexicographically smallest monic
// irreducible polynomial of degree n over Z_p (smallest index when the
// coefficient digits are read as a base-p number).
class GaloisField {
public:
    GaloisField(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int mul(int a, int b) const { return mul_table_[a * q_ + b]; }
    // Field trace to Z_p: Tr(x) = x + x^p + ... + x^(p^(n-1)).
    int trace(int a) const { return trace_table_[a]; }

private:
    int p_, n_, q_;
    std::vector<int> modulus_;
    std::vector<int> mul_table_;
    std::vector<int> trace_table_;
};

// d+1 MUBs for d = 2 (Pauli eigenbases) or an odd prime power (Wootters-
// Fields trace characters), computational basis first. Throws
// UnsupportedDimension otherwise, including even prime powers 4, 8, 16, ...
MubSet construct_mub(int d);

// Exhaustive orthonormality and unbiasedness scan. Throws DimensionMismatch
// if the bases disagree on d.
MubVerification verify_mub(const MubSet& set, double tol);

// JSON layout: {"d": int, "label": string, "bases": [[[ [re, im], ... ], ...], ...]},
// vectors stored as columns, components listed per vector. Doubles carry 17
// significant digits. parse validates via verify_mub at tol 1e-6.
std::string serialize_mub(const MubSet& set);

// parse_mub_json validates shape only; parse_mub_file additionally gates on
// verify_mub at tol 1e-6.
MubSet parse_mub_json(const std::string& content);
MubSet parse_mub_file(const std::string& content);

}  // namespace mubcoh
