#include "mubcoh/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mubcoh/bounds.hpp"
#include "mubcoh/errors.hpp"
#include "mubcoh/harness.hpp"
#include "mubcoh/measures.hpp"
#include "mubcoh/mub.hpp"
#include "mubcoh/rng.hpp"
#include "mubcoh/states.hpp"

namespace mubcoh {

namespace {

std::string fmt(double v, bool machine) {
    char buf[40];
    std::snprintf(buf, sizeof buf, machine ? "%.17g" : "%.12g", v);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Either the fallback stream or a file opened for --out.
class Sink {
  public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            os_ = &fallback;
        } else {
            file_.open(path, std::ios::binary);
            if (!file_) throw IoError("cannot open " + path);
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }

  private:
    std::ostream* os_ = nullptr;
    std::ofstream file_;
};

struct LoadedState {
    std::optional<PureState> psi;
    std::optional<DensityMatrix> rho;

    int dim() const { return psi ? psi->dim() : rho->dim(); }
    DensityMatrix density() const { return psi ? DensityMatrix::from_pure(*psi) : *rho; }
};

// {"kind": "pure"|"density", "d": n, "state": ...} with [re, im] pairs;
// a pure state is a flat vector, a density matrix a list of rows.
LoadedState parse_state_file(const std::string& content) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("state file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("d") ||
        !doc.contains("state") || !doc["kind"].is_string() || !doc["d"].is_number_integer()) {
        throw ParseError("state file: expected object with \"kind\", \"d\", \"state\"");
    }
    const int d = doc["d"].get<int>();
    if (d < 1) throw ParseError("state file: d must be >= 1");
    const std::string kind = doc["kind"].get<std::string>();
    const auto& state = doc["state"];
    auto read_pair = [](const nlohmann::json& entry) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw ParseError("state file: component must be [re, im]");
        }
        return Complex(entry[0].get<double>(), entry[1].get<double>());
    };
    LoadedState out;
    if (kind == "pure") {
        if (!state.is_array() || static_cast<int>(state.size()) != d) {
            throw ParseError("state file: pure state must hold d components");
        }
        CVec v(d);
        for (int i = 0; i < d; ++i) v[i] = read_pair(state[i]);
        out.psi = PureState(std::move(v));
    } else if (kind == "density") {
        if (!state.is_array() || static_cast<int>(state.size()) != d) {
            throw ParseError("state file: density matrix must hold d rows");
        }
        CMat m(d, d);
        for (int i = 0; i < d; ++i) {
            const auto& row = state[i];
            if (!row.is_array() || static_cast<int>(row.size()) != d) {
                throw ParseError("state file: each row must hold d components");
            }
            for (int j = 0; j < d; ++j) m(i, j) = read_pair(row[j]);
        }
        out.rho = DensityMatrix(std::move(m));
    } else {
        throw ParseError("state file: kind must be \"pure\" or \"density\"");
    }
    return out;
}

std::vector<int> parse_mrange(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        try {
            if (dots != std::string::npos) {
                const int lo = std::stoi(item.substr(0, dots));
                const int hi = std::stoi(item.substr(dots + 2));
                if (lo > hi) throw ParseError("mrange: empty interval " + item);
                for (int m = lo; m <= hi; ++m) out.push_back(m);
            } else {
                out.push_back(std::stoi(item));
            }
        } catch (const std::invalid_argument&) {
            throw ParseError("mrange: cannot parse " + item);
        } catch (const std::out_of_range&) {
            throw ParseError("mrange: out of range " + item);
        }
    }
    if (out.empty()) throw ParseError("mrange: empty specification");
    return out;
}

SweepConfig parse_sweep_config(const std::string& content) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("sweep config: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc["dims"].is_array()) {
        throw ParseError("sweep config: expected object with \"dims\" array");
    }
    SweepConfig cfg;
    try {
        cfg.dims = doc["dims"].get<std::vector<int>>();
        if (doc.contains("m_values")) {
            for (const auto& [key, value] : doc["m_values"].items()) {
                cfg.m_values[std::stoi(key)] = value.get<std::vector<int>>();
            }
        }
        if (doc.contains("ensembles")) {
            cfg.ensembles.clear();
            for (const auto& name : doc["ensembles"]) {
                const auto e = parse_ensemble(name.get<std::string>());
                if (!e) throw ParseError("sweep config: unknown ensemble " +
                                         name.get<std::string>());
                cfg.ensembles.push_back(*e);
            }
        }
        cfg.rank = doc.value("rank", cfg.rank);
        cfg.trials = doc.value("trials", cfg.trials);
        cfg.master_seed = doc.value("master_seed", cfg.master_seed);
        cfg.tol = doc.value("tol", cfg.tol);
        cfg.output_path = doc.value("output", cfg.output_path);
        cfg.format = doc.value("format", cfg.format);
        cfg.counterexample_path = doc.value("counterexample", cfg.counterexample_path);
        cfg.keep_reports = doc.value("keep_reports", cfg.keep_reports);
        cfg.oracle_adjudication = doc.value("oracle_adjudication", cfg.oracle_adjudication);
        if (doc.contains("oracle")) {
            const auto& o = doc["oracle"];
            cfg.oracle_opts.starts = o.value("starts", cfg.oracle_opts.starts);
            cfg.oracle_opts.max_iters = o.value("max_iters", cfg.oracle_opts.max_iters);
            cfg.oracle_opts.tol = o.value("tol", cfg.oracle_opts.tol);
        }
        if (doc.contains("mub_files")) {
            for (const auto& [key, value] : doc["mub_files"].items()) {
                cfg.mub_files[std::stoi(key)] = value.get<std::string>();
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("sweep config: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("sweep config: non-integer dimension key");
    }
    if (cfg.counterexample_path.empty()) cfg.counterexample_path = "counterexample.json";
    return cfg;
}

struct CoherenceArgs {
    std::string basis_file;
    int mub_d = 0;
    int truncate_m = 0;
    std::string state_file;
    bool random = false;
    int rank = 0;
    std::uint64_t seed = 1;
    std::string measure;
    int starts = 0;
    int iters = 0;
    std::string format;
    std::string out_path;
};

int cmd_coherence(const CoherenceArgs& a, std::ostream& out) {
    MubSet set;
    if (!a.basis_file.empty()) {
        set = parse_mub_file(read_text_file(a.basis_file));
    } else {
        set = construct_mub(a.mub_d);
    }
    if (a.truncate_m > 0) {
        if (a.truncate_m > set.size()) {
            throw DomainError("coherence: M exceeds available bases");
        }
        set = set.truncated(a.truncate_m);
    }
    const int d = set.dim;

    LoadedState state;
    if (!a.state_file.empty()) {
        state = parse_state_file(read_text_file(a.state_file));
        if (state.dim() != d) {
            throw DimensionMismatch("coherence: state dim " + std::to_string(state.dim()) +
                                    " vs basis dim " + std::to_string(d));
        }
    } else {
        if (a.rank > 0) {
            state.rho = sample_density(d, a.rank, a.seed);
        } else {
            state.psi = sample_pure(d, a.seed);
        }
    }

    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    if (a.measure == "c1") {
        columns = {"value"};
        const DensityMatrix rho = state.density();
        for (const Basis& b : set.bases) rows.push_back({rel_entropy_coherence(b, rho)});
    } else if (a.measure == "cg-pure") {
        if (!state.psi) throw DomainError("coherence: cg-pure needs a pure state");
        columns = {"value"};
        for (const Basis& b : set.bases) rows.push_back({geometric_coherence_pure(b, *state.psi)});
    } else if (a.measure == "cg-bounds") {
        columns = {"lower", "upper"};
        const DensityMatrix rho = state.density();
        for (const Basis& b : set.bases) {
            const GeomBounds g = geometric_coherence_bounds(b, rho);
            rows.push_back({g.lower, g.upper});
        }
    } else if (a.measure == "cg-numeric") {
        columns = {"value", "converged"};
        const DensityMatrix rho = state.density();
        GeomNumericOptions opts;
        if (a.starts > 0) opts.starts = a.starts;
        if (a.iters > 0) opts.max_iters = a.iters;
        opts.seed = derive_seed({a.seed, 777});
        for (const Basis& b : set.bases) {
            const GeomNumeric g = geometric_coherence_numeric(b, rho, opts);
            rows.push_back({g.value, g.converged ? 1.0 : 0.0});
        }
    } else {
        throw DomainError("coherence: unknown measure " + a.measure);
    }

    std::vector<double> avg(columns.size(), 0.0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < avg.size(); ++c) avg[c] += row[c];
    }
    for (double& v : avg) v /= static_cast<double>(rows.size());

    Sink sink(a.out_path, out);
    std::ostream& os = sink.stream();
    const bool machine = !a.format.empty();
    if (a.format == "json") {
        nlohmann::json per_basis = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json entry;
            for (std::size_t c = 0; c < columns.size(); ++c) entry[columns[c]] = row[c];
            per_basis.push_back(std::move(entry));
        }
        nlohmann::json avg_json;
        for (std::size_t c = 0; c < columns.size(); ++c) avg_json[columns[c]] = avg[c];
        const nlohmann::json doc = {{"measure", a.measure},
                                    {"d", d},
                                    {"bases", set.size()},
                                    {"per_basis", per_basis},
                                    {"average", avg_json}};
        os << doc.dump(2) << '\n';
    } else if (a.format == "csv") {
        os << "basis";
        for (const auto& c : columns) os << ',' << c;
        os << '\n';
        for (std::size_t t = 0; t < rows.size(); ++t) {
            os << t;
            for (double v : rows[t]) os << ',' << fmt(v, true);
            os << '\n';
        }
        os << "average";
        for (double v : avg) os << ',' << fmt(v, true);
        os << '\n';
    } else if (a.format.empty()) {
        os << "measure " << a.measure << ", d=" << d << ", bases=" << set.size() << '\n';
        for (std::size_t t = 0; t < rows.size(); ++t) {
            os << "basis " << t << ':';
            for (double v : rows[t]) os << ' ' << fmt(v, machine);
            os << '\n';
        }
        os << "average:";
        for (double v : avg) os << ' ' << fmt(v, machine);
        os << '\n';
    } else {
        throw DomainError("coherence: unknown format " + a.format);
    }
    return 0;
}

struct BoundsEvalArgs {
    std::string bound;
    int d = 0;
    int m = 0;
    double purity = 1.0;
    double entropy = 0.0;
    std::string format;
    std::string out_path;
};

int cmd_bounds_eval(const BoundsEvalArgs& a, std::ostream& out) {
    std::vector<std::pair<std::string, double>> values;
    const MubBoundParams params{a.d, a.m, a.purity, a.entropy};
    if (a.bound == "prop1") {
        values.emplace_back("value", prop1_rhs(params));
    } else if (a.bound == "prop1_pure") {
        values.emplace_back("value", prop1_pure_rhs(a.d, a.m));
    } else if (a.bound == "pati_mub") {
        values.emplace_back("value", pati_mub_rhs(a.d, a.m));
    } else if (a.bound == "prop2") {
        values.emplace_back("value", prop2_rhs(params));
    } else if (a.bound == "prop2_pure") {
        values.emplace_back("value", prop2_pure_rhs(a.d, a.m));
    } else if (a.bound == "prop2_lp_pure") {
        values.emplace_back("value", prop2_pure_lp_rhs(a.d, a.m));
    } else if (a.bound == "maxprob_sum") {
        values.emplace_back("value", maxprob_sum_rhs(a.d, a.m));
    } else if (a.bound == "ic_sum") {
        const auto [dep, free] = ic_sum_rhs(a.d, a.m, a.purity);
        values.emplace_back("state_dependent", dep);
        values.emplace_back("state_free", free);
    } else if (a.bound == "prop3") {
        values.emplace_back("value", prop3_rhs(a.d, a.m));
    } else if (a.bound == "rmub12") {
        values.emplace_back("value", rmub12_rhs(a.d, a.m));
    } else if (a.bound == "mim6") {
        const MubSet set = construct_mub(a.d).truncated(a.m);
        std::vector<Povm> povms;
        for (const Basis& b : set.bases) povms.push_back(povm_from_basis(b));
        values.emplace_back("value", mim6_rhs(povms, std::vector<int>(povms.size(), 0)));
    } else {
        throw DomainError("bounds eval: unknown bound " + a.bound);
    }

    Sink sink(a.out_path, out);
    std::ostream& os = sink.stream();
    if (a.format == "json") {
        nlohmann::json doc = {{"bound", a.bound}, {"d", a.d}, {"M", a.m}};
        for (const auto& [key, v] : values) doc[key] = v;
        os << doc.dump(2) << '\n';
    } else if (a.format == "csv") {
        os << "bound_id,d,M";
        for (const auto& [key, v] : values) os << ',' << key;
        os << '\n' << a.bound << ',' << a.d << ',' << a.m;
        for (const auto& [key, v] : values) os << ',' << fmt(v, true);
        os << '\n';
    } else if (a.format.empty()) {
        for (const auto& [key, v] : values) {
            if (values.size() > 1) os << key << ' ';
            os << fmt(v, false) << '\n';
        }
    } else {
        throw DomainError("bounds eval: unknown format " + a.format);
    }
    return 0;
}

int cmd_table1(long long dmax, const std::string& format, const std::string& out_path,
               std::ostream& out) {
    const std::vector<Table1Row> rows = table1_intervals(dmax);
    Sink sink(out_path, out);
    std::ostream& os = sink.stream();
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Table1Row& r : rows) {
            arr.push_back({{"M1", r.m1}, {"d_low", r.d_low}, {"d_high", r.d_high}});
        }
        os << arr.dump(2) << '\n';
    } else if (format == "csv") {
        os << "M1,d_low,d_high\n";
        for (const Table1Row& r : rows) {
            os << r.m1 << ',' << r.d_low << ',' << r.d_high << '\n';
        }
    } else if (format.empty()) {
        os << "M1    d_low    d_high\n";
        for (const Table1Row& r : rows) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%-5d %-8lld %-8lld\n", r.m1,
                          static_cast<long long>(r.d_low), static_cast<long long>(r.d_high));
            os << buf;
        }
    } else {
        throw DomainError("table1: unknown format " + format);
    }
    return 0;
}

int cmd_compare(int d, const std::string& mrange, const std::string& format,
                const std::string& out_path, std::ostream& out) {
    const std::vector<CompareRow> rows = compare_bounds(d, parse_mrange(mrange));
    Sink sink(out_path, out);
    std::ostream& os = sink.stream();
    const bool machine = format == "csv" || format == "json";
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const CompareRow& r : rows) {
            arr.push_back({{"d", r.d},
                           {"M", r.M},
                           {"prop1_pure", r.prop1_pure},
                           {"pati_mub", r.pati_mub},
                           {"winner_c1", r.winner_c1},
                           {"prop2_pure", r.prop2_pure},
                           {"prop2_lp_pure", r.prop2_lp_pure},
                           {"winner_cg", r.winner_cg},
                           {"prop3", r.prop3},
                           {"rmub12", r.rmub12},
                           {"winner_hmin", r.winner_hmin}});
        }
        os << arr.dump(2) << '\n';
    } else if (format == "csv" || format.empty()) {
        if (format == "csv") {
            os << "d,M,prop1_pure,pati_mub,winner_c1,prop2_pure,prop2_lp_pure,winner_cg,"
                  "prop3,rmub12,winner_hmin\n";
        } else {
            os << "d,M: prop1_pure vs pati_mub | prop2_pure vs prop2_lp_pure | prop3 vs rmub12\n";
        }
        for (const CompareRow& r : rows) {
            if (format == "csv") {
                os << r.d << ',' << r.M << ',' << fmt(r.prop1_pure, machine) << ','
                   << fmt(r.pati_mub, machine) << ',' << r.winner_c1 << ','
                   << fmt(r.prop2_pure, machine) << ',' << fmt(r.prop2_lp_pure, machine) << ','
                   << r.winner_cg << ',' << fmt(r.prop3, machine) << ','
                   << fmt(r.rmub12, machine) << ',' << r.winner_hmin << '\n';
            } else {
                os << r.d << ',' << r.M << ": " << fmt(r.prop1_pure, machine) << " vs "
                   << fmt(r.pati_mub, machine) << " -> " << r.winner_c1 << " | "
                   << fmt(r.prop2_pure, machine) << " vs " << fmt(r.prop2_lp_pure, machine)
                   << " -> " << r.winner_cg << " | " << fmt(r.prop3, machine) << " vs "
                   << fmt(r.rmub12, machine) << " -> " << r.winner_hmin << '\n';
            }
        }
    } else {
        throw DomainError("compare: unknown format " + format);
    }
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_override,
              const std::string& format_override, std::ostream& out) {
    SweepConfig cfg = parse_sweep_config(read_text_file(config_path));
    if (!out_override.empty()) cfg.output_path = out_override;
    if (!format_override.empty()) cfg.format = format_override;
    const SweepResult result = run_sweep(cfg);

    out << "bound            count      min_slack        mean_slack       violations\n";
    for (const auto& [id, s] : result.summary) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-16s %-10lld %-16.9g %-16.9g %lld\n", id.c_str(),
                      s.count, s.min_slack, s.mean_slack, s.violations);
        out << buf;
    }
    out << "total trials: " << result.total_trials << '\n';
    out << "violations: " << result.violation_count << '\n';
    out << "inconclusive: " << result.inconclusive.size() << '\n';
    out << "min entropy chain slack: " << fmt(result.min_chain_slack, false) << '\n';
    if (result.violation_found) {
        out << "counterexample written to " << cfg.counterexample_path << '\n';
        return 1;
    }
    return 0;
}

int cmd_mub_gen(int d, int m, const std::string& out_path, std::ostream& out) {
    MubSet set = construct_mub(d);
    if (m > 0) {
        if (m > set.size()) throw DomainError("mub gen: M exceeds available bases");
        set = set.truncated(m);
    }
    Sink sink(out_path, out);
    sink.stream() << serialize_mub(set);
    return 0;
}

int cmd_mub_verify(const std::string& path, double tol, std::ostream& out, std::ostream& err) {
    const MubSet set = parse_mub_json(read_text_file(path));
    const MubVerification rep = verify_mub(set, tol);
    out << "d: " << set.dim << '\n';
    out << "bases: " << set.size() << '\n';
    out << "max orthonormality deviation: " << fmt(rep.max_ortho_dev, false) << '\n';
    out << "max unbiasedness deviation: " << fmt(rep.max_unbias_dev, false) << '\n';
    out << (rep.pass ? "pass" : "FAIL") << " at tol " << fmt(tol, false) << '\n';
    if (!rep.pass) {
        err << "verification failed at tol " << fmt(tol, false) << '\n';
        return 2;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mutually unbiased bases, coherence measures, and bound verification"};
    app.require_subcommand(1);

    // mub gen / mub verify
    auto* mub_cmd = app.add_subcommand("mub", "construct or verify basis sets");
    mub_cmd->require_subcommand(1);
    auto* gen = mub_cmd->add_subcommand("gen", "construct a full set of mutually unbiased bases");
    int gen_d = 0, gen_m = 0;
    std::string gen_out;
    gen->add_option("--d", gen_d, "dimension")->required();
    gen->add_option("--M", gen_m, "keep only the first M bases");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    auto* verify = mub_cmd->add_subcommand("verify", "verify a basis-set file");
    std::string verify_file;
    double verify_tol = 1e-10;
    verify->add_option("--file", verify_file, "basis-set JSON file")->required();
    verify->add_option("--tol", verify_tol, "deviation tolerance (default 1e-10)");

    // coherence
    auto* coh = app.add_subcommand("coherence", "coherence of a state in one or more bases");
    CoherenceArgs ca;
    auto* coh_basis_file = coh->add_option("--basis-file", ca.basis_file, "basis-set JSON file");
    auto* coh_mub_d = coh->add_option("--mub-d", ca.mub_d, "construct the full set for this d");
    coh_basis_file->excludes(coh_mub_d);
    coh_mub_d->excludes(coh_basis_file);
    coh->add_option("--M", ca.truncate_m, "keep only the first M bases");
    auto* coh_state = coh->add_option("--state-file", ca.state_file, "state JSON file");
    auto* coh_random = coh->add_flag("--random", ca.random, "sample a random state");
    coh_state->excludes(coh_random);
    coh_random->excludes(coh_state);
    coh->add_option("--rank", ca.rank, "random state rank (0 = pure, default)");
    coh->add_option("--seed", ca.seed, "random state seed (default 1)");
    coh->add_option("--measure", ca.measure, "c1 | cg-pure | cg-bounds | cg-numeric")->required();
    coh->add_option("--starts", ca.starts, "ascent restarts for cg-numeric");
    coh->add_option("--iters", ca.iters, "ascent iteration cap for cg-numeric");
    coh->add_option("--format", ca.format, "csv | json (default human-readable)");
    coh->add_option("--out", ca.out_path, "output path (default stdout)");

    // bounds eval
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound evaluation");
    bounds_cmd->require_subcommand(1);
    auto* beval = bounds_cmd->add_subcommand("eval", "evaluate one bound");
    BoundsEvalArgs ba;
    beval->add_option("--bound", ba.bound, "bound identifier")->required();
    beval->add_option("--d", ba.d, "dimension")->required();
    beval->add_option("--M", ba.m, "number of bases")->required();
    beval->add_option("--purity", ba.purity, "tr(rho^2), default 1");
    beval->add_option("--entropy", ba.entropy, "S_1(rho), default 0");
    beval->add_option("--format", ba.format, "csv | json (default human-readable)");
    beval->add_option("--out", ba.out_path, "output path (default stdout)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte-Carlo inequality sweep");
    std::string sweep_config, sweep_out, sweep_format;
    sweep_cmd->add_option("--config", sweep_config, "sweep config JSON file")->required();
    sweep_cmd->add_option("--out", sweep_out, "override the config output path");
    sweep_cmd->add_option("--format", sweep_format, "override the config format");

    // table1
    auto* table_cmd = app.add_subcommand("table1", "crossover intervals of the two pure lower bounds");
    long long table_dmax = 0;
    std::string table_format, table_out;
    table_cmd->add_option("--dmax", table_dmax, "largest dimension")->required();
    table_cmd->add_option("--format", table_format, "csv | json (default human-readable)");
    table_cmd->add_option("--out", table_out, "output path (default stdout)");

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "pointwise bound comparison grid");
    int compare_d = 0;
    std::string compare_mrange, compare_format, compare_out;
    compare_cmd->add_option("--d", compare_d, "dimension")->required();
    compare_cmd->add_option("--mrange", compare_mrange, "M values, e.g. 2..8 or 2,3,5")->required();
    compare_cmd->add_option("--format", compare_format, "csv | json (default human-readable)");
    compare_cmd->add_option("--out", compare_out, "output path (default stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mubcoh");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_mub_gen(gen_d, gen_m, gen_out, out);
        if (verify->parsed()) return cmd_mub_verify(verify_file, verify_tol, out, err);
        if (coh->parsed()) {
            if (ca.basis_file.empty() && ca.mub_d == 0) {
                err << "coherence: provide --basis-file or --mub-d\n";
                return 2;
            }
            if (ca.state_file.empty() && !ca.random) {
                err << "coherence: provide --state-file or --random\n";
                return 2;
            }
            return cmd_coherence(ca, out);
        }
        if (beval->parsed()) return cmd_bounds_eval(ba, out);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_config, sweep_out, sweep_format, out);
        if (table_cmd->parsed()) return cmd_table1(table_dmax, table_format, table_out, out);
        if (compare_cmd->parsed()) {
            return cmd_compare(compare_d, compare_mrange, compare_format, compare_out, out);
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace mubcoh
