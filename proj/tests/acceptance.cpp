// Acceptance gate: one pass/fail line per criterion, exit code is the number
// of failed criteria.
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mubcoh/bounds.hpp"
#include "mubcoh/cli.hpp"
#include "mubcoh/errors.hpp"
#include "mubcoh/harness.hpp"
#include "mubcoh/measures.hpp"
#include "mubcoh/mub.hpp"
#include "mubcoh/rng.hpp"
#include "mubcoh/states.hpp"

namespace {

int g_failures = 0;

void report(int n, const std::string& name, bool ok, const std::string& detail) {
    if (ok) {
        std::printf("criterion %d (%s): PASS\n", n, name.c_str());
    } else {
        std::printf("criterion %d (%s): FAIL %s\n", n, name.c_str(), detail.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

template <typename F>
void criterion(int n, const std::string& name, F&& body) {
    try {
        std::string detail;
        const bool ok = body(detail);
        report(n, name, ok, detail);
    } catch (const std::exception& e) {
        report(n, name, false, std::string("exception: ") + e.what());
    }
}

bool check_threshold_table(std::string& detail) {
    std::ostringstream out, err;
    const int code = mubcoh::run_cli({"table1", "--dmax", "823500", "--format", "csv"}, out, err);
    if (code != 0) {
        detail = "exit code " + std::to_string(code);
        return false;
    }
    const std::string expected =
        "M1,d_low,d_high\n"
        "3,2,20\n"
        "4,21,243\n"
        "5,244,3104\n"
        "6,3105,46625\n"
        "7,46626,823500\n";
    if (out.str() != expected) {
        detail = "table mismatch:\n" + out.str();
        return false;
    }
    return true;
}

bool check_coincidence_identity(std::string& detail) {
    const auto reports = mubcoh::saturation_suite({2, 3, 5, 7}, 1000, 20260822ULL);
    for (const auto& r : reports) {
        if (r.max_ic_dev > 1e-10) {
            detail = "d=" + std::to_string(r.d) + " deviation " + std::to_string(r.max_ic_dev);
            return false;
        }
    }
    return true;
}

bool check_mixed_saturation(std::string& detail) {
    for (int d : {2, 3, 5, 7}) {
        const mubcoh::MubSet full = mubcoh::construct_mub(d);
        const mubcoh::DensityMatrix mixed = mubcoh::DensityMatrix::maximally_mixed(d);
        for (int m = 1; m <= d + 1; ++m) {
            const auto outcome =
                mubcoh::evaluate_trial(full.truncated(m), &mixed, nullptr, 1e-9, "mixed",
                                       mubcoh::GeomNumericOptions{}, true);
            for (const mubcoh::BoundReport& r : outcome.reports) {
                if (r.bound_id != "prop1") continue;
                if (std::abs(r.lhs) > 1e-12 || std::abs(r.rhs) > 1e-12) {
                    detail = "d=" + std::to_string(d) + " M=" + std::to_string(m) + " lhs=" +
                             std::to_string(r.lhs) + " rhs=" + std::to_string(r.rhs);
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<mubcoh::SweepResult> g_sweep;

bool check_inequality_sweep(std::string& detail) {
    mubcoh::SweepConfig cfg;
    cfg.dims = {2, 3, 5, 7, 9};
    cfg.trials = 10000;
    cfg.master_seed = 20260822ULL;
    cfg.tol = 1e-9;
    g_sweep = mubcoh::run_sweep(cfg);
    // M runs over 2..d+1, so each dimension contributes d cells
    const long long expected_trials = (2 + 3 + 5 + 7 + 9) * 2LL * 10000LL;
    if (g_sweep->total_trials != expected_trials) {
        detail = "trial count " + std::to_string(g_sweep->total_trials) + ", expected " +
                 std::to_string(expected_trials);
        return false;
    }
    if (g_sweep->violation_count != 0) {
        std::string worst;
        for (const auto& [id, s] : g_sweep->summary) {
            if (s.violations > 0) worst += " " + id + "(" + std::to_string(s.violations) + ")";
        }
        detail = std::to_string(g_sweep->violation_count) + " violations:" + worst;
        return false;
    }
    return true;
}

bool check_geometric_optimizer(std::string& detail) {
    mubcoh::GeomNumericOptions opts;
    opts.starts = 2;
    opts.max_iters = 300;
    opts.tol = 1e-9;
    for (int d : {2, 3, 5}) {
        const mubcoh::MubSet full = mubcoh::construct_mub(d);
        for (int trial = 0; trial < 1000; ++trial) {
            const mubcoh::Basis& b = full.bases[trial % (d + 1)];

            const mubcoh::PureState psi = mubcoh::sample_pure(
                d, mubcoh::derive_seed({5001, static_cast<std::uint64_t>(d),
                                        static_cast<std::uint64_t>(trial)}));
            opts.seed = mubcoh::derive_seed({5002, static_cast<std::uint64_t>(d),
                                             static_cast<std::uint64_t>(trial)});
            const double closed = mubcoh::geometric_coherence_pure(b, psi);
            const double numeric =
                mubcoh::geometric_coherence_numeric(b, mubcoh::DensityMatrix::from_pure(psi), opts)
                    .value;
            if (std::abs(numeric - closed) > 1e-6) {
                detail = "pure d=" + std::to_string(d) + " trial " + std::to_string(trial) +
                         " numeric " + std::to_string(numeric) + " closed " +
                         std::to_string(closed);
                return false;
            }

            const mubcoh::DensityMatrix rho = mubcoh::sample_density(
                d, d, mubcoh::derive_seed({5003, static_cast<std::uint64_t>(d),
                                           static_cast<std::uint64_t>(trial)}));
            opts.seed = mubcoh::derive_seed({5004, static_cast<std::uint64_t>(d),
                                             static_cast<std::uint64_t>(trial)});
            const auto sandwich = mubcoh::geometric_coherence_bounds(b, rho);
            const double value = mubcoh::geometric_coherence_numeric(b, rho, opts).value;
            if (value < sandwich.lower - 1e-7 || value > sandwich.upper + 1e-7) {
                detail = "mixed d=" + std::to_string(d) + " trial " + std::to_string(trial) +
                         " value " + std::to_string(value) + " outside [" +
                         std::to_string(sandwich.lower) + ", " + std::to_string(sandwich.upper) +
                         "]";
                return false;
            }
        }
    }
    return true;
}

bool check_bound_comparisons(std::string& detail) {
    // (a) with the full set of bases the direct geometric bound wins
    for (int d = 2; d <= 50; ++d) {
        if (!(mubcoh::prop2_pure_rhs(d, d + 1) > mubcoh::prop2_pure_lp_rhs(d, d + 1))) {
            detail = "part a at d=" + std::to_string(d);
            return false;
        }
    }
    // (b) with two bases in high dimension the ranking reverses
    const double lp = mubcoh::prop2_pure_lp_rhs(100, 2);
    const double direct = mubcoh::prop2_pure_rhs(100, 2);
    const double p3 = mubcoh::prop3_rhs(100, 2);
    const double rm = mubcoh::rmub12_rhs(100, 2);
    if (!(lp > direct) || !(p3 > rm)) {
        detail = "part b ranking";
        return false;
    }
    if (std::abs(lp - 0.42928932188134524756) > 1e-12 ||
        std::abs(direct - 0.28996428662531795084) > 1e-12) {
        detail = "part b geometric values drifted";
        return false;
    }
    if (std::abs(p3 - 0.5614) > 1e-3 || std::abs(rm - 0.3427) > 1e-3) {
        detail = "part b min entropy values drifted";
        return false;
    }
    // (c) at the threshold basis count the entropy bound beats log d over M
    for (const auto& row : mubcoh::table1_intervals(823500)) {
        for (long long dd : {row.d_low, row.d_high}) {
            const int d = static_cast<int>(dd);
            if (!(mubcoh::prop1_pure_rhs(d, row.m1) > mubcoh::pati_mub_rhs(d, row.m1))) {
                detail = "part c at d=" + std::to_string(d) + " M=" + std::to_string(row.m1);
                return false;
            }
        }
    }
    return true;
}

bool check_entropy_chain(std::string& detail) {
    if (!g_sweep) {
        detail = "sweep unavailable";
        return false;
    }
    if (g_sweep->min_chain_slack < -1e-10) {
        detail = "min chain slack " + std::to_string(g_sweep->min_chain_slack);
        return false;
    }
    return true;
}

bool check_overlap_reduction(std::string& detail) {
    for (int d : {2, 3, 5, 7}) {
        const mubcoh::MubSet full = mubcoh::construct_mub(d);
        for (int m = 2; m <= d + 1; ++m) {
            std::vector<mubcoh::Povm> povms;
            std::vector<int> indices;
            for (int t = 0; t < m; ++t) {
                povms.push_back(mubcoh::povm_from_basis(full.bases[t]));
                indices.push_back(0);
            }
            const double lhs = mubcoh::mim6_rhs(povms, indices);
            const double rhs = mubcoh::maxprob_sum_rhs(d, m);
            if (std::abs(lhs - rhs) > 1e-10) {
                detail = "d=" + std::to_string(d) + " M=" + std::to_string(m) + " gap " +
                         std::to_string(lhs - rhs);
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "threshold table reproduction", check_threshold_table);
    criterion(2, "coincidence sum identity", check_coincidence_identity);
    criterion(3, "mixed state saturation", check_mixed_saturation);
    criterion(4, "inequality sweep", check_inequality_sweep);
    criterion(5, "geometric optimizer consistency", check_geometric_optimizer);
    criterion(6, "bound comparisons", check_bound_comparisons);
    criterion(7, "entropy chain ordering", check_entropy_chain);
    criterion(8, "projector overlap reduction", check_overlap_reduction);
    std::printf("%d of 8 criteria passed\n", 8 - g_failures);
    return g_failures;
}
