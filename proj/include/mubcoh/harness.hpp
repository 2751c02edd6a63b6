#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mubcoh/bounds.hpp"
#include "mubcoh/measures.hpp"
#include "mubcoh/mub.hpp"
#include "mubcoh/states.hpp"

namespace mubcoh {

enum class Ensemble { Pure, MixedFullRank, MixedRankR };

std::string ensemble_name(Ensemble e);
std::optional<Ensemble> parse_ensemble(const std::string& name);

struct SweepConfig {
    std::vector<int> dims;
    // per-d basis counts; a missing entry defaults to 2..d+1
    std::map<int, std::vector<int>> m_values;
    std::vector<Ensemble> ensembles{Ensemble::Pure, Ensemble::MixedFullRank};
    int rank = 1;  // only consulted for the mixed-rank-r ensemble
    long long trials = 1000;
    std::uint64_t master_seed = 1;
    double tol = 1e-9;
    std::string output_path;  // empty disables file output
    std::string format = "csv";
    std::string counterexample_path;
    bool keep_reports = false;
    bool oracle_adjudication = true;
    GeomNumericOptions oracle_opts;
    std::map<int, std::string> mub_files;  // per-d file overrides for the basis set

    std::vector<int> m_list(int d) const;
    void validate() const;
};

struct BoundSummary {
    std::string bound_id;
    double min_slack = std::numeric_limits<double>::infinity();
    double mean_slack = 0.0;
    long long count = 0;
    long long violations = 0;
};

// A mixed-state C_g check whose conservative lower-edge test failed while the
// ascent value passed. Recorded, never counted as a violation.
struct InconclusiveRecord {
    int d = 0;
    int M = 0;
    std::string ensemble;
    long long trial = 0;
    std::uint64_t seed = 0;
    double conservative_lhs = 0.0;
    double oracle_lhs = 0.0;
    double rhs = 0.0;
};

struct SweepResult {
    std::map<std::string, BoundSummary> summary;
    std::vector<BoundReport> reports;  // populated only with keep_reports
    std::vector<InconclusiveRecord> inconclusive;
    long long total_trials = 0;
    long long violation_count = 0;
    double min_chain_slack = std::numeric_limits<double>::infinity();
    bool violation_found = false;
    std::string first_counterexample;  // serialized JSON, empty if none
};

struct TrialOutcome {
    std::vector<BoundReport> reports;
    double min_chain_slack = std::numeric_limits<double>::infinity();
    bool prop2_inconclusive = false;
    bool oracle_ran = false;
    double prop2_conservative_lhs = 0.0;
    double prop2_oracle_lhs = 0.0;
    double prop2_rhs_value = 0.0;
};

// Evaluates every applicable bound for one state against one truncated basis
// set. Exactly one of rho/psi must be non-null; psi selects the pure-state
// path with its exact closed forms.
TrialOutcome evaluate_trial(const MubSet& mubs, const DensityMatrix* rho, const PureState* psi,
                            double tol, const std::string& label,
                            const GeomNumericOptions& oracle_opts, bool oracle_adjudication);

SweepResult run_sweep(const SweepConfig& config);

std::string summary_to_json(const SweepResult& result);

struct Table1Row {
    int m1 = 0;
    long long d_low = 0;
    long long d_high = 0;
};

int table1_m1(long long d);
std::vector<Table1Row> table1_intervals(long long d_max);

struct CompareRow {
    int d = 0;
    int M = 0;
    double prop1_pure = 0.0;
    double pati_mub = 0.0;
    double prop2_pure = 0.0;
    double prop2_lp_pure = 0.0;
    double prop3 = 0.0;
    double rmub12 = 0.0;
    std::string winner_c1;
    std::string winner_cg;
    std::string winner_hmin;
};

std::vector<CompareRow> compare_bounds(int d, const std::vector<int>& m_range);

struct SaturationReport {
    int d = 0;
    long long trials = 0;
    double max_ic_dev = 0.0;        // worst |sum_t J_t - (tr rho^2 + 1)|
    double mixed_state_c1_dev = 0.0;  // |avg C_1| and |rhs| at identity/d, larger of the two
    bool pass = false;
};

std::vector<SaturationReport> saturation_suite(const std::vector<int>& dims, long long trials,
                                               std::uint64_t seed);

// MUBCOH_THREADS, 0 or unset picks hardware concurrency.
int thread_budget();

}  // namespace mubcoh
