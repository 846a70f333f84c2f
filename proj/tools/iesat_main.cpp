// iesat command line tool.
//
// Subcommands: solve, oracle, gen, lll, bench {meta-taut, phase, meta-lll}.
// Machine-readable output (JSON / CSV / formula text) goes to stdout or the
// requested output file; diagnostics and run logs go to stderr. Exit codes:
//   0 decided / completed     2 undecided / inconclusive
//   1 usage error             3 resource limit
//   4 parse or input error

#include "iesat/experiments.hpp"
#include "iesat/io.hpp"
#include "iesat/lll.hpp"
#include "iesat/oracle.hpp"
#include "iesat/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace iesat;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitResourceLimit = 3;
constexpr int kExitParse = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write output file: " + path);
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
}

struct InputOptions {
    std::string path;
    std::string format = "native";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input,-i", in.path, "formula file, or - for stdin")->required();
    cmd->add_option("--format", in.format, "input format (default native)")
        ->check(CLI::IsMember({"native", "dimacs"}));
}

Formula load_formula(const InputOptions& in) {
    const std::string text = read_input(in.path);
    return in.format == "dimacs" ? parse_dimacs(text) : parse_native(text);
}

struct SolveOptions {
    InputOptions in;
    std::string mode = "auto";
    int threshold = -1; // -1: full depth
    int jobs = 1;
    std::optional<std::size_t> max_table;
    std::optional<long long> time_budget_ms;
    std::string json_path;
};

SolverConfig solver_config(const SolveOptions& o) {
    SolverConfig cfg;
    if (o.threshold >= 0) cfg.threshold = o.threshold;
    cfg.jobs = o.jobs;
    cfg.max_table_entries = o.max_table;
    if (o.time_budget_ms) cfg.time_budget = std::chrono::milliseconds(*o.time_budget_ms);
    return cfg;
}

int run_solve(const SolveOptions& o) {
    const Formula f = load_formula(o.in);
    std::string mode = o.mode;
    if (mode == "auto") mode = f.kind() == Kind::dnf ? "taut" : "sat";

    const SolverConfig cfg = solver_config(o);
    bool decided;
    std::string out;
    if (mode == "taut") {
        const SolverOutcome r = taut(f, cfg);
        decided = r.decided;
        out = outcome_to_json(r);
    } else {
        const SatOutcome r = solve_cnf_sat(f, cfg);
        decided = r.decided;
        out = outcome_to_json(r);
    }
    write_output(o.json_path, out);
    return decided ? kExitOk : kExitUndecided;
}

struct OracleOptions {
    InputOptions in;
    int max_vars = 24;
    std::string json_path;
};

int run_oracle(const OracleOptions& o) {
    const Formula f = load_formula(o.in);
    const OracleLimits limits{o.max_vars};

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t count = count_satisfying(f, limits);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();

    nlohmann::ordered_json j;
    j["decided"] = true;
    if (f.kind() == Kind::dnf) {
        j["is_tautology"] = (count == (1ULL << f.num_vars()));
    } else {
        j["is_satisfiable"] = (count > 0);
    }
    j["method"] = "bruteforce";
    j["count_satisfying"] = count;
    j["exponent"] = f.num_vars();
    j["wall_ms"] = ms;
    write_output(o.json_path, j.dump());
    return kExitOk;
}

struct GenOptions {
    int vars = 0;
    int clauses = 0;
    int width = 3;
    std::uint64_t seed = 0;
    std::string kind = "dnf";
    bool dimacs = false;
};

int run_gen(const GenOptions& o) {
    if (o.dimacs && o.kind != "cnf") {
        throw CLI::ValidationError("--dimacs requires --kind cnf");
    }
    const Formula f = rand_nf({o.vars, o.clauses, o.width, o.seed},
                              o.kind == "dnf" ? Kind::dnf : Kind::cnf);
    std::cout << (o.dimacs ? write_dimacs(f) : serialize_native(f) + "\n");
    return kExitOk;
}

struct LllOptions {
    InputOptions in;
    std::string variant = "asym";
    std::string json_path;
};

std::string rational_str(const BigRational& r) {
    return boost::multiprecision::numerator(r).str() +
           (boost::multiprecision::denominator(r) == 1
                ? ""
                : "/" + boost::multiprecision::denominator(r).str());
}

int run_lll(const LllOptions& o) {
    const Formula f = load_formula(o.in);
    const LllVariant variant =
        o.variant == "sym" ? LllVariant::symmetric : LllVariant::asymmetric;
    const DependencyGraph g = dnf_to_pg(f);
    const LllReport r = lll_report(g, variant);

    nlohmann::ordered_json j;
    j["verdict"] = r.holds ? "not_tautology" : "inconclusive";
    j["variant"] = o.variant;
    j["p_max"] = rational_str(r.p_max);
    j["d_max"] = r.d_max;
    auto failing = nlohmann::ordered_json::array();
    for (int i : r.failing) failing.push_back(i + 1); // 1-based clause indices
    j["failing_indices"] = std::move(failing);
    write_output(o.json_path, j.dump());
    return r.holds ? kExitOk : kExitUndecided;
}

struct BenchCommon {
    int vars = 0;
    int width = 3;
    int trials = 100;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::optional<std::size_t> max_table;
    std::optional<long long> time_budget_ms;
    std::string csv_path;
};

BatchParams batch_params(const BenchCommon& b) {
    BatchParams p;
    p.num_vars = b.vars;
    p.clause_width = b.width;
    p.trials = b.trials;
    p.seed = b.seed;
    p.jobs = b.jobs;
    p.max_table_entries = b.max_table;
    if (b.time_budget_ms) p.time_budget = std::chrono::milliseconds(*b.time_budget_ms);
    return p;
}

void log_bench(const std::string& what, const BenchCommon& b) {
    std::cerr << "iesat bench " << what << ": seed=" << b.seed << " trials=" << b.trials
              << " prng=" << kPrngId << " version=" << kVersion << '\n';
}

void write_csv(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write output file: " + path);
        out << content;
    }
}

int run_meta_taut(const BenchCommon& b, int clauses, int threshold) {
    log_bench("meta-taut", b);
    BatchParams p = batch_params(b);
    p.num_clauses = clauses;
    p.threshold = threshold;
    const auto records = meta_taut(p);
    std::ostringstream csv;
    write_trials_csv(csv, records);
    write_csv(b.csv_path, csv.str());
    return kExitOk;
}

int run_phase(const BenchCommon& b, int threshold, int from, int to, int step) {
    log_bench("phase", b);
    BatchParams p = batch_params(b);
    p.threshold = threshold;
    const auto points = phase_sweep(p, from, to, step);
    std::ostringstream csv;
    write_sweep_csv(csv, points);
    write_csv(b.csv_path, csv.str());
    return kExitOk;
}

int run_meta_lll(const BenchCommon& b, int clauses) {
    log_bench("meta-lll", b);
    BatchParams p = batch_params(b);
    p.num_clauses = clauses;
    std::vector<LllTrialRow> rows;
    const MetaLllSummary s = meta_lll(p, &rows);

    std::ostringstream csv;
    write_lll_csv(csv, rows);
    write_csv(b.csv_path, csv.str());

    nlohmann::ordered_json j;
    j["trials"] = s.trials;
    j["excluded"] = s.excluded;
    j["actual_nontaut"] = s.actual_nontaut;
    j["detected_sym"] = s.detected_sym;
    j["detected_asym"] = s.detected_asym;
    j["prop_detected_sym"] = s.prop_detected_sym();
    j["prop_detected_asym"] = s.prop_detected_asym();
    j["prop_actual_nontaut"] = s.prop_actual_nontaut();
    // Summary shares stdout with the CSV only if the CSV went to a file.
    (b.csv_path.empty() ? std::cerr : std::cout) << j.dump() << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inclusion-exclusion SAT/tautology solver"};
    app.set_version_flag("--version", std::string("iesat ") + kVersion +
                                          " (prng " + kPrngId + ")");
    app.require_subcommand(1);

    SolveOptions solve_opts;
    CLI::App* solve_cmd =
        app.add_subcommand("solve", "decide DNF tautology / CNF satisfiability");
    add_input_options(solve_cmd, solve_opts.in);
    solve_cmd->add_option("--threshold,-k", solve_opts.threshold,
                          "inclusion-exclusion depth K (default: full depth)")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--mode", solve_opts.mode,
                          "taut (DNF) or sat (CNF); default follows the input kind")
        ->check(CLI::IsMember({"auto", "taut", "sat"}));
    solve_cmd->add_option("--jobs,-j", solve_opts.jobs, "expansion worker threads")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--max-table", solve_opts.max_table,
                          "cap on level-table entries");
    solve_cmd->add_option("--time-budget-ms", solve_opts.time_budget_ms,
                          "wall-clock budget in milliseconds");
    solve_cmd->add_option("--json", solve_opts.json_path,
                          "write the outcome JSON here instead of stdout");

    OracleOptions oracle_opts;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "brute-force ground truth by full enumeration");
    add_input_options(oracle_cmd, oracle_opts.in);
    oracle_cmd->add_option("--max-vars", oracle_opts.max_vars,
                           "refuse formulas with more variables than this");
    oracle_cmd->add_option("--json", oracle_opts.json_path,
                           "write the outcome JSON here instead of stdout");

    GenOptions gen_opts;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random normal form");
    gen_cmd->add_option("--vars,-n", gen_opts.vars, "variable count")->required();
    gen_cmd->add_option("--clauses,-N", gen_opts.clauses, "clause count")->required();
    gen_cmd->add_option("--width,-M", gen_opts.width, "literals per clause (default 3)");
    gen_cmd->add_option("--seed,-s", gen_opts.seed, "generator seed");
    gen_cmd->add_option("--kind", gen_opts.kind, "dnf or cnf (default dnf)")
        ->check(CLI::IsMember({"dnf", "cnf"}));
    gen_cmd->add_flag("--dimacs", gen_opts.dimacs, "emit DIMACS (requires --kind cnf)");

    LllOptions lll_opts;
    CLI::App* lll_cmd =
        app.add_subcommand("lll", "Lovasz local lemma non-tautology check");
    add_input_options(lll_cmd, lll_opts.in);
    lll_cmd->add_option("--variant", lll_opts.variant, "sym or asym (default asym)")
        ->check(CLI::IsMember({"sym", "asym"}));
    lll_cmd->add_option("--json", lll_opts.json_path,
                        "write the report JSON here instead of stdout");

    CLI::App* bench_cmd = app.add_subcommand("bench", "experiment harness, emits CSV");
    bench_cmd->require_subcommand(1);

    auto add_bench_common = [](CLI::App* cmd, BenchCommon& b) {
        cmd->add_option("--vars,-n", b.vars, "variable count")->required();
        cmd->add_option("--width,-M", b.width, "literals per clause (default 3)");
        cmd->add_option("--trials,-t", b.trials, "number of random formulas")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed,-s", b.seed, "master seed; trial t uses a derived sub-seed");
        cmd->add_option("--jobs,-j", b.jobs, "worker threads across trials")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-table", b.max_table, "per-trial cap on table entries");
        cmd->add_option("--time-budget-ms", b.time_budget_ms, "per-trial time budget");
        cmd->add_option("--csv", b.csv_path, "write the CSV here instead of stdout");
    };

    BenchCommon mt_common;
    int mt_clauses = 0, mt_threshold = 0;
    CLI::App* mt_cmd = bench_cmd->add_subcommand(
        "meta-taut", "run taut on a batch of random DNFs; trials CSV");
    add_bench_common(mt_cmd, mt_common);
    mt_cmd->add_option("--clauses,-N", mt_clauses, "clause count")->required();
    mt_cmd->add_option("--threshold,-k", mt_threshold, "depth threshold K")->required();

    BenchCommon ph_common;
    int ph_threshold = 0, ph_from = 0, ph_to = 0, ph_step = 1;
    CLI::App* ph_cmd = bench_cmd->add_subcommand(
        "phase", "success-probability curve over a clause-count range; sweep CSV");
    add_bench_common(ph_cmd, ph_common);
    ph_cmd->add_option("--threshold,-k", ph_threshold, "depth threshold K")->required();
    ph_cmd->add_option("--from", ph_from, "first clause count")->required();
    ph_cmd->add_option("--to", ph_to, "last clause count")->required();
    ph_cmd->add_option("--step", ph_step, "clause count step (default 1)");

    BenchCommon ml_common;
    int ml_clauses = 0;
    CLI::App* ml_cmd = bench_cmd->add_subcommand(
        "meta-lll", "LLL detection rates vs full-depth ground truth; lll CSV");
    add_bench_common(ml_cmd, ml_common);
    ml_cmd->add_option("--clauses,-N", ml_clauses, "clause count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_opts);
        if (oracle_cmd->parsed()) return run_oracle(oracle_opts);
        if (gen_cmd->parsed()) return run_gen(gen_opts);
        if (lll_cmd->parsed()) return run_lll(lll_opts);
        if (mt_cmd->parsed()) return run_meta_taut(mt_common, mt_clauses, mt_threshold);
        if (ph_cmd->parsed()) return run_phase(ph_common, ph_threshold, ph_from, ph_to, ph_step);
        if (ml_cmd->parsed()) return run_meta_lll(ml_common, ml_clauses);
        std::cerr << "iesat: no subcommand\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "iesat: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "iesat: resource limit: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const TooLargeError& e) {
        std::cerr << "iesat: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const ParseError& e) {
        std::cerr << "iesat: parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const MalformedError& e) {
        std::cerr << "iesat: malformed input: " << e.what() << '\n';
        return kExitParse;
    } catch (const KindError& e) {
        std::cerr << "iesat: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidSpecError& e) {
        std::cerr << "iesat: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "iesat: " << e.what() << '\n';
        return kExitUsage;
    }
}
