#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mubcoh/mub.hpp"
#include "mubcoh/numerics.hpp"

namespace mubcoh {

// Positive operator-valued measure. Elements must be PSD (within 1e-10) and
// sum to the identity (within 1e-9); validate() enforces both.
struct Povm {
    std::vector<CMat> elements;

    int dim() const { return elements.empty() ? 0 : static_cast<int>(elements[0].rows()); }
    void validate() const;
};

Povm povm_from_basis(const Basis& basis);

// Shared parameter bundle for the closed-form bound evaluators. State
// dependence enters only through purity and entropy.
struct MubBoundParams {
    int d = 0;
    int M = 0;
    double purity = 1.0;
    double entropy = 0.0;

    void validate() const;
};

struct BoundReport {
    std::string bound_id;
    int d = 0;
    int M = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double purity = 0.0;
    double entropy = 0.0;
    std::string state_label;
    bool holds = false;
};

double prop1_rhs(const MubBoundParams& p);
double prop1_pure_rhs(int d, int m);
double pati_mub_rhs(int d, int m);
double prop2_rhs(const MubBoundParams& p);
double prop2_pure_rhs(int d, int m);
double prop2_pure_lp_rhs(int d, int m);
double maxprob_sum_rhs(int d, int m);
double mim6_rhs(const std::vector<Povm>& povms, const std::vector<int>& indices);

// (state_dependent, state_free)
std::pair<double, double> ic_sum_rhs(int d, int m, double purity);

double prop3_rhs(int d, int m);
double rmub12_rhs(int d, int m);

BoundReport check_lower_bound(const std::string& bound_id, double lhs, double rhs, double tol,
                              const MubBoundParams& p, const std::string& state_label);
BoundReport check_upper_bound(const std::string& bound_id, double lhs, double rhs, double tol,
                              const MubBoundParams& p, const std::string& state_label);

}  // namespace mubcoh
