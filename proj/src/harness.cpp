#include "mubcoh/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "mubcoh/errors.hpp"
#include "mubcoh/rng.hpp"

namespace mubcoh {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

constexpr double kChainInit = std::numeric_limits<double>::infinity();

}  // namespace

std::string ensemble_name(Ensemble e) {
    switch (e) {
        case Ensemble::Pure:
            return "pure";
        case Ensemble::MixedFullRank:
            return "mixed-full-rank";
        case Ensemble::MixedRankR:
            return "mixed-rank-r";
    }
    return "unknown";
}

std::optional<Ensemble> parse_ensemble(const std::string& name) {
    if (name == "pure") return Ensemble::Pure;
    if (name == "mixed-full-rank") return Ensemble::MixedFullRank;
    if (name == "mixed-rank-r") return Ensemble::MixedRankR;
    return std::nullopt;
}

std::vector<int> SweepConfig::m_list(int d) const {
    const auto it = m_values.find(d);
    if (it != m_values.end()) return it->second;
    std::vector<int> out;
    for (int m = 2; m <= d + 1; ++m) out.push_back(m);
    return out;
}

void SweepConfig::validate() const {
    if (dims.empty()) throw DomainError("SweepConfig: no dimensions");
    for (int d : dims) {
        if (d < 2) throw DomainError("SweepConfig: d must be >= 2");
        for (int m : m_list(d)) {
            if (m < 1) throw DomainError("SweepConfig: M must be >= 1");
        }
    }
    if (ensembles.empty()) throw DomainError("SweepConfig: no ensembles");
    if (trials < 1) throw DomainError("SweepConfig: trials must be >= 1");
    if (tol <= 0.0) throw DomainError("SweepConfig: tol must be positive");
    if (format != "csv" && format != "json") {
        throw DomainError("SweepConfig: format must be csv or json");
    }
    for (Ensemble e : ensembles) {
        if (e == Ensemble::MixedRankR) {
            for (int d : dims) {
                if (rank < 1 || rank > d) {
                    throw DomainError("SweepConfig: rank " + std::to_string(rank) +
                                      " invalid for d = " + std::to_string(d));
                }
            }
        }
    }
}

TrialOutcome evaluate_trial(const MubSet& mubs, const DensityMatrix* rho, const PureState* psi,
                            double tol, const std::string& label,
                            const GeomNumericOptions& oracle_opts, bool oracle_adjudication) {
    if ((rho == nullptr) == (psi == nullptr)) {
        throw DomainError("evaluate_trial: provide exactly one of rho, psi");
    }
    const int d = mubs.dim;
    const int m = mubs.size();
    if (m < 1) throw DomainError("evaluate_trial: empty basis set");

    TrialOutcome out;
    const bool pure = psi != nullptr;
    const double pur = pure ? 1.0 : purity(*rho);
    const double ent = pure ? 0.0 : von_neumann_entropy(*rho);
    const MubBoundParams params{d, m, pur, ent};

    double sum_h1 = 0.0, sum_hmin = 0.0, sum_j = 0.0, sum_pmax = 0.0;
    double sum_cg_pure = 0.0, sum_cg_lower = 0.0;
    for (int t = 0; t < m; ++t) {
        const Basis& b = mubs.bases[t];
        const ProbDist p = pure ? probabilities(b, *psi) : probabilities(b, *rho);
        const double h1 = shannon_entropy(p);
        const double j = index_of_coincidence(p);
        const double hmin = min_entropy(p);
        sum_h1 += h1;
        sum_j += j;
        sum_hmin += hmin;
        sum_pmax += p.max();
        out.min_chain_slack = std::min(out.min_chain_slack, h1 + std::log(j));
        out.min_chain_slack = std::min(out.min_chain_slack, -std::log(j) - hmin);
        if (pure) {
            sum_cg_pure += 1.0 - p.max();
        } else {
            sum_cg_lower += std::max(0.0, geom_lower_from_ioc(d, j, pur));
        }
    }
    const double avg_c1 = sum_h1 / m - ent;
    const double avg_hmin = sum_hmin / m;

    auto& reports = out.reports;
    reports.push_back(check_lower_bound("prop1", avg_c1, prop1_rhs(params), tol, params, label));
    const double rhs2 = prop2_rhs(params);
    out.prop2_rhs_value = rhs2;
    if (pure) {
        const double avg_cg = sum_cg_pure / m;
        reports.push_back(
            check_lower_bound("prop1_pure", avg_c1, prop1_pure_rhs(d, m), tol, params, label));
        reports.push_back(
            check_lower_bound("pati_mub", avg_c1, pati_mub_rhs(d, m), tol, params, label));
        reports.push_back(check_lower_bound("prop2", avg_cg, rhs2, tol, params, label));
        reports.push_back(check_lower_bound("prop2_lp_pure", avg_cg, prop2_pure_lp_rhs(d, m), tol,
                                            params, label));
        reports.push_back(check_upper_bound("maxprob_sum", sum_pmax, maxprob_sum_rhs(d, m), tol,
                                            params, label));
    } else {
        const double cons = sum_cg_lower / m;
        out.prop2_conservative_lhs = cons;
        if (cons - rhs2 >= -tol || !oracle_adjudication) {
            reports.push_back(check_lower_bound("prop2", cons, rhs2, tol, params, label));
        } else {
            // the ascent value over-estimates the true coherence, so a pass
            // here is inconclusive while a failure is genuine
            double osum = 0.0;
            for (int t = 0; t < m; ++t) {
                osum += geometric_coherence_numeric(mubs.bases[t], *rho, oracle_opts).value;
            }
            const double olhs = osum / m;
            out.oracle_ran = true;
            out.prop2_oracle_lhs = olhs;
            BoundReport r =
                check_lower_bound("prop2", olhs, rhs2, tol, params, label + "/ascent");
            out.prop2_inconclusive = r.holds;
            reports.push_back(std::move(r));
        }
    }
    reports.push_back(check_lower_bound("prop3", avg_hmin, prop3_rhs(d, m), tol, params, label));
    reports.push_back(check_lower_bound("rmub12", avg_hmin, rmub12_rhs(d, m), tol, params, label));
    reports.push_back(check_upper_bound("ic_sum", sum_j, ic_sum_rhs(d, m, pur).first, tol, params,
                                        label));
    return out;
}

namespace {

struct TrialSlot {
    TrialOutcome outcome;
    std::uint64_t seed = 0;
    CMat state;  // filled only when a report in this trial failed
};

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json state_to_json(const CMat& state) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < state.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < state.cols(); ++j) {
            row.push_back({state(i, j).real(), state(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    SweepResult result;
    result.min_chain_slack = kChainInit;

    std::ofstream csv;
    const bool csv_mode = !cfg.output_path.empty() && cfg.format == "csv";
    if (csv_mode) {
        csv.open(cfg.output_path, std::ios::binary);
        if (!csv) throw IoError("cannot open " + cfg.output_path);
        csv << "bound_id,d,M,ensemble,trial,lhs,rhs,slack,holds,purity,entropy,seed\n";
    }

    const int threads = std::max(1, thread_budget());

    for (int d : cfg.dims) {
        MubSet full;
        const auto file_it = cfg.mub_files.find(d);
        if (file_it != cfg.mub_files.end()) {
            full = parse_mub_file(read_text_file(file_it->second));
            if (full.dim != d) {
                throw DomainError("run_sweep: file " + file_it->second + " holds d = " +
                                  std::to_string(full.dim) + ", expected " + std::to_string(d));
            }
        } else {
            full = construct_mub(d);
        }
        for (int m : cfg.m_list(d)) {
            if (m > full.size()) {
                throw DomainError("run_sweep: cell d=" + std::to_string(d) + " M=" +
                                  std::to_string(m) + " exceeds available bases (" +
                                  std::to_string(full.size()) + ")");
            }
            const MubSet cell = full.truncated(m);
            for (Ensemble ens : cfg.ensembles) {
                const std::string ens_label = ensemble_name(ens);
                const std::uint64_t ens_tag = static_cast<std::uint64_t>(ens);
                std::vector<TrialSlot> slots(static_cast<std::size_t>(cfg.trials));

                auto worker = [&](long long begin, long long end) {
                    for (long long i = begin; i < end; ++i) {
                        TrialSlot& slot = slots[static_cast<std::size_t>(i)];
                        slot.seed = derive_seed({cfg.master_seed, static_cast<std::uint64_t>(d),
                                                 static_cast<std::uint64_t>(m), ens_tag,
                                                 static_cast<std::uint64_t>(i)});
                        GeomNumericOptions opts = cfg.oracle_opts;
                        opts.seed = derive_seed({slot.seed, 10});
                        if (ens == Ensemble::Pure) {
                            const PureState psi = sample_pure(d, slot.seed);
                            slot.outcome = evaluate_trial(cell, nullptr, &psi, cfg.tol, ens_label,
                                                          opts, cfg.oracle_adjudication);
                            for (const BoundReport& r : slot.outcome.reports) {
                                if (!r.holds) {
                                    slot.state =
                                        psi.amplitudes() * psi.amplitudes().adjoint();
                                    break;
                                }
                            }
                        } else {
                            const int rank = ens == Ensemble::MixedFullRank ? d : cfg.rank;
                            const DensityMatrix rho = sample_density(d, rank, slot.seed);
                            slot.outcome = evaluate_trial(cell, &rho, nullptr, cfg.tol, ens_label,
                                                          opts, cfg.oracle_adjudication);
                            for (const BoundReport& r : slot.outcome.reports) {
                                if (!r.holds) {
                                    slot.state = rho.matrix();
                                    break;
                                }
                            }
                        }
                    }
                };

                if (threads == 1 || cfg.trials < 2 * threads) {
                    worker(0, cfg.trials);
                } else {
                    std::vector<std::thread> pool;
                    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
                    const long long chunk = (cfg.trials + threads - 1) / threads;
                    for (int t = 0; t < threads; ++t) {
                        const long long begin = t * chunk;
                        const long long end = std::min<long long>(begin + chunk, cfg.trials);
                        if (begin >= end) break;
                        pool.emplace_back([&, begin, end, t] {
                            try {
                                worker(begin, end);
                            } catch (...) {
                                errors[static_cast<std::size_t>(t)] = std::current_exception();
                            }
                        });
                    }
                    for (std::thread& th : pool) th.join();
                    for (const std::exception_ptr& e : errors) {
                        if (e) std::rethrow_exception(e);
                    }
                }

                for (long long i = 0; i < cfg.trials; ++i) {
                    const TrialSlot& slot = slots[static_cast<std::size_t>(i)];
                    result.total_trials += 1;
                    result.min_chain_slack =
                        std::min(result.min_chain_slack, slot.outcome.min_chain_slack);
                    if (slot.outcome.prop2_inconclusive) {
                        result.inconclusive.push_back(
                            {d, m, ens_label, i, slot.seed, slot.outcome.prop2_conservative_lhs,
                             slot.outcome.prop2_oracle_lhs, slot.outcome.prop2_rhs_value});
                    }
                    for (const BoundReport& r : slot.outcome.reports) {
                        BoundSummary& s = result.summary[r.bound_id];
                        if (s.bound_id.empty()) s.bound_id = r.bound_id;
                        s.min_slack = std::min(s.min_slack, r.slack);
                        s.mean_slack += r.slack;
                        s.count += 1;
                        if (!r.holds) {
                            s.violations += 1;
                            result.violation_count += 1;
                            if (result.first_counterexample.empty()) {
                                nlohmann::json j = nlohmann::json::parse(serialize_mub(cell));
                                j["label"] = "counterexample";
                                j["bound_id"] = r.bound_id;
                                j["ensemble"] = ens_label;
                                j["trial"] = i;
                                j["seed"] = slot.seed;
                                j["lhs"] = r.lhs;
                                j["rhs"] = r.rhs;
                                j["state"] = {{"kind", "density"},
                                              {"d", d},
                                              {"state", state_to_json(slot.state)}};
                                result.first_counterexample = j.dump(2);
                            }
                        }
                        if (csv_mode) {
                            csv << r.bound_id << ',' << d << ',' << m << ',' << ens_label << ','
                                << i << ',' << g17(r.lhs) << ',' << g17(r.rhs) << ','
                                << g17(r.slack) << ',' << (r.holds ? 1 : 0) << ','
                                << g17(r.purity) << ',' << g17(r.entropy) << ',' << slot.seed
                                << '\n';
                        }
                        if (cfg.keep_reports) result.reports.push_back(r);
                    }
                }
            }
        }
    }

    for (auto& [id, s] : result.summary) {
        if (s.count > 0) s.mean_slack /= static_cast<double>(s.count);
    }
    result.violation_found = result.violation_count > 0;

    if (result.violation_found && !cfg.counterexample_path.empty()) {
        std::ofstream out(cfg.counterexample_path, std::ios::binary);
        if (!out) throw IoError("cannot open " + cfg.counterexample_path);
        out << result.first_counterexample << '\n';
    }
    if (!cfg.output_path.empty() && cfg.format == "json") {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) throw IoError("cannot open " + cfg.output_path);
        out << summary_to_json(result) << '\n';
    }
    if (csv_mode && !csv) throw IoError("write failure on " + cfg.output_path);
    return result;
}

std::string summary_to_json(const SweepResult& result) {
    nlohmann::json bounds = nlohmann::json::object();
    for (const auto& [id, s] : result.summary) {
        bounds[id] = {{"min_slack", s.min_slack},
                      {"mean_slack", s.mean_slack},
                      {"count", s.count},
                      {"violations", s.violations}};
    }
    nlohmann::json inconclusive = nlohmann::json::array();
    for (const InconclusiveRecord& r : result.inconclusive) {
        inconclusive.push_back({{"d", r.d},
                                {"M", r.M},
                                {"ensemble", r.ensemble},
                                {"trial", r.trial},
                                {"seed", r.seed},
                                {"conservative_lhs", r.conservative_lhs},
                                {"ascent_lhs", r.oracle_lhs},
                                {"rhs", r.rhs}});
    }
    nlohmann::json doc = {{"bounds", bounds},
                          {"total_trials", result.total_trials},
                          {"violations", result.violation_count},
                          {"inconclusive", inconclusive},
                          {"min_entropy_chain_slack", result.min_chain_slack}};
    return doc.dump(2);
}

int table1_m1(long long d) {
    if (d < 2) throw DomainError("table1_m1: d must be >= 2");
    const double lnd = std::log(static_cast<double>(d));
    for (int m = 2;; ++m) {
        const double lhs = std::log(m * static_cast<double>(d) / (d + m - 1.0));
        if (lhs >= lnd / m) return m;
    }
}

std::vector<Table1Row> table1_intervals(long long d_max) {
    if (d_max < 2) throw DomainError("table1_intervals: d_max must be >= 2");
    std::vector<Table1Row> rows;
    for (long long d = 2; d <= d_max; ++d) {
        const int m1 = table1_m1(d);
        if (!rows.empty() && rows.back().m1 == m1) {
            rows.back().d_high = d;
        } else {
            rows.push_back({m1, d, d});
        }
    }
    return rows;
}

std::vector<CompareRow> compare_bounds(int d, const std::vector<int>& m_range) {
    if (d < 2) throw DomainError("compare_bounds: d must be >= 2");
    if (m_range.empty()) throw DomainError("compare_bounds: empty M range");
    auto winner = [](double a, const std::string& an, double b, const std::string& bn) {
        if (a > b) return an;
        if (b > a) return bn;
        return std::string("tie");
    };
    std::vector<CompareRow> rows;
    rows.reserve(m_range.size());
    for (int m : m_range) {
        if (m < 1) throw DomainError("compare_bounds: M must be >= 1");
        CompareRow row;
        row.d = d;
        row.M = m;
        row.prop1_pure = prop1_pure_rhs(d, m);
        row.pati_mub = pati_mub_rhs(d, m);
        row.prop2_pure = prop2_pure_rhs(d, m);
        row.prop2_lp_pure = prop2_pure_lp_rhs(d, m);
        row.prop3 = prop3_rhs(d, m);
        row.rmub12 = rmub12_rhs(d, m);
        row.winner_c1 = winner(row.prop1_pure, "prop1_pure", row.pati_mub, "pati_mub");
        row.winner_cg = winner(row.prop2_pure, "prop2_pure", row.prop2_lp_pure, "prop2_lp_pure");
        row.winner_hmin = winner(row.prop3, "prop3", row.rmub12, "rmub12");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SaturationReport> saturation_suite(const std::vector<int>& dims, long long trials,
                                               std::uint64_t seed) {
    if (trials < 1) throw DomainError("saturation_suite: trials must be >= 1");
    std::vector<SaturationReport> out;
    const GeomNumericOptions opts;
    for (int d : dims) {
        const MubSet full = construct_mub(d);
        SaturationReport rep;
        rep.d = d;
        rep.trials = trials;
        for (long long i = 0; i < trials; ++i) {
            const DensityMatrix rho =
                sample_density(d, d, derive_seed({seed, static_cast<std::uint64_t>(d),
                                                  static_cast<std::uint64_t>(i)}));
            double sum_j = 0.0;
            for (const Basis& b : full.bases) {
                sum_j += index_of_coincidence(probabilities(b, rho));
            }
            rep.max_ic_dev = std::max(rep.max_ic_dev, std::abs(sum_j - (purity(rho) + 1.0)));
        }
        const DensityMatrix mixed = DensityMatrix::maximally_mixed(d);
        const TrialOutcome at_mixed =
            evaluate_trial(full, &mixed, nullptr, 1e-9, "maximally-mixed", opts, true);
        for (const BoundReport& r : at_mixed.reports) {
            if (r.bound_id == "prop1") {
                rep.mixed_state_c1_dev = std::max(std::abs(r.lhs), std::abs(r.rhs));
            }
        }
        rep.pass = rep.max_ic_dev <= 1e-10 && rep.mixed_state_c1_dev <= 1e-10;
        out.push_back(rep);
    }
    return out;
}

int thread_budget() {
    const char* env = std::getenv("MUBCOH_THREADS");
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (env == nullptr || *env == '\0') return static_cast<int>(hw);
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) return static_cast<int>(hw);
    if (v == 0) return static_cast<int>(hw);
    return static_cast<int>(v);
}

}  // namespace mubcoh
