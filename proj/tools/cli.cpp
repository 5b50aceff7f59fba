#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdcode/bench.hpp"
#include "tdcode/io.hpp"
#include "tdcode/one_ended.hpp"
#include "tdcode/oracle.hpp"
#include "tdcode/problems.hpp"

namespace tdcode::cli {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
    std::string problem;
    std::string algorithm = "batched";
    std::uint64_t radix = 0;
    std::vector<std::uint64_t> lengths;
    std::uint64_t g = 0;
    std::string spec;
    std::string levels;
    std::string spec_file;
    std::vector<std::uint64_t> arities;
    std::string weights;
    std::string weights_file;
    std::string output = "cost";
    std::size_t max_level = 0;
    bool no_timing = false;
    // bench
    std::vector<std::size_t> sizes{50, 100, 200, 400};
    std::size_t reps = 1;
    std::string distribution = "uniform";
    std::uint64_t seed = 1;
};

// Usage problems found after CLI11 has parsed the flags.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput:
        case ErrorKind::InvalidRange:
        case ErrorKind::InvalidLeafSequence:
        case ErrorKind::InsufficientLeaves:
            return 2;
        case ErrorKind::NoFeasibleTree:
            return 3;
        case ErrorKind::Overflow:
        case ErrorKind::ArityOverflow:
            return 4;
        case ErrorKind::BudgetExceeded:
            return 5;
        case ErrorKind::InternalInconsistency:
            return 1;
    }
    return 1;
}

gmr::Algorithm parse_algorithm(const std::string& s) {
    if (s == "naive") {
        return gmr::Algorithm::Naive;
    }
    if (s == "batched") {
        return gmr::Algorithm::Batched;
    }
    throw UsageError("unknown algorithm '" + s + "' (naive or batched)");
}

std::string_view algorithm_name(gmr::Algorithm a) { return a == gmr::Algorithm::Naive ? "naive" : "batched"; }

std::uint64_t parse_uint(const std::string& s) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || s.front() == '-') {
        throw UsageError("not a non-negative integer: '" + s + "'");
    }
    return v;
}

// "r:c,r:c,..." (":c" may be omitted for unit edges)
std::vector<LevelParams> parse_level_list(const std::string& text) {
    std::vector<LevelParams> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        const auto colon = item.find(':');
        LevelParams lp;
        lp.arity = parse_uint(item.substr(0, colon));
        lp.edge = colon == std::string::npos ? 1 : parse_uint(item.substr(colon + 1));
        out.push_back(lp);
    }
    if (out.empty()) {
        throw UsageError("empty level list");
    }
    return out;
}

std::vector<LevelParams> read_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open spec file " + path);
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad spec file: ") + e.what());
    }
    if (doc.is_object() && doc.contains("levels")) {
        doc = doc["levels"];
    }
    if (!doc.is_array()) {
        throw UsageError("spec file must hold an array of levels");
    }
    std::vector<LevelParams> out;
    try {
        for (const auto& lv : doc) {
            if (lv.is_array() && lv.size() == 2) {
                out.push_back(LevelParams{lv[0].get<std::uint64_t>(), lv[1].get<std::uint64_t>()});
            } else if (lv.is_object()) {
                out.push_back(LevelParams{lv.at("arity").get<std::uint64_t>(), lv.value("edge", std::uint64_t{1})});
            } else {
                throw UsageError("each level is [arity, edge] or {\"arity\":..,\"edge\":..}");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad level in spec file: ") + e.what());
    }
    return out;
}

LevelSpec gmr_levels(const RunConfig& cfg, std::size_t n) {
    const int given = !cfg.spec.empty() + !cfg.levels.empty() + !cfg.spec_file.empty();
    if (given > 1) {
        throw UsageError("--spec, --levels and --spec-file are mutually exclusive");
    }
    if (!cfg.levels.empty()) {
        return LevelSpec(parse_level_list(cfg.levels));
    }
    if (!cfg.spec_file.empty()) {
        return LevelSpec(read_spec_file(cfg.spec_file));
    }
    const std::string name = cfg.spec.empty() ? "binary" : cfg.spec;
    static const std::map<std::string, std::uint64_t> named{{"binary", 2}, {"ternary", 3}, {"quaternary", 4}};
    const std::size_t depth = std::max<std::size_t>(n, 1);
    if (auto it = named.find(name); it != named.end()) {
        return LevelSpec::constant(it->second, 1, depth);
    }
    // a single "r:c" applies to every level
    const auto lv = parse_level_list(name);
    if (lv.size() != 1) {
        throw UsageError("--spec takes binary, ternary, quaternary or one r:c pair");
    }
    return LevelSpec::constant(lv[0].arity, lv[0].edge, depth);
}

std::vector<std::int64_t> load_weights(const RunConfig& cfg) {
    if (!cfg.weights.empty() && !cfg.weights_file.empty()) {
        throw UsageError("--weights and --weights-file are mutually exclusive");
    }
    if (cfg.weights.empty() && cfg.weights_file.empty()) {
        throw UsageError("no weights given (--weights or --weights-file)");
    }
    return cfg.weights.empty() ? read_weights_file(cfg.weights_file) : parse_weights(cfg.weights);
}

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw UsageError(what);
    }
}

std::uint64_t radix_or(const RunConfig& cfg, std::uint64_t fallback) { return cfg.radix ? cfg.radix : fallback; }

// Everything a solve run reports, independent of the problem.
struct Outcome {
    Cost cost;
    CodeBook book;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> expansion;
    std::vector<LevelParams> levels;
    std::uint64_t cells = 0;
};

Outcome from_solution(const problems::Solution& sol) {
    Outcome o;
    o.cost = sol.book.cost;
    o.book = sol.book;
    for (const auto& s : sol.dp.expansion) {
        o.expansion.emplace_back(s.m, s.b);
    }
    o.levels = sol.levels.levels();
    o.cells = sol.dp.cells_updated;
    return o;
}

void check_problem_flags(const RunConfig& cfg) {
    const std::string& p = cfg.problem;
    const bool level_flags = !cfg.spec.empty() || !cfg.levels.empty() || !cfg.spec_file.empty();
    if (p != "gmr") {
        require(!level_flags, "--spec/--levels/--spec-file only apply to --problem gmr");
    }
    if (p != "mixed-radix") {
        require(cfg.arities.empty(), "--arities only applies to --problem mixed-radix");
    }
    if (p != "reserved-given") {
        require(cfg.lengths.empty(), "--lengths only applies to --problem reserved-given");
    }
    if (p != "reserved-g") {
        require(cfg.g == 0, "--g only applies to --problem reserved-g");
    }
    if (p == "one-ended" || p == "gmr" || p == "mixed-radix") {
        require(cfg.radix == 0, "--radix does not apply to --problem " + p);
    }
    if (p != "gmr") {
        require(cfg.max_level == 0, "--max-level only applies to --problem gmr");
    }
    if (p == "mixed-radix") {
        require(!cfg.arities.empty(), "--problem mixed-radix needs --arities");
    }
    if (p == "reserved-given") {
        require(!cfg.lengths.empty(), "--problem reserved-given needs --lengths");
    }
    if (p == "reserved-g") {
        require(cfg.g > 0, "--problem reserved-g needs --g");
    }
}

Outcome run_solver(const RunConfig& cfg, const WeightSeq& w, gmr::Algorithm alg) {
    const std::string& p = cfg.problem;
    if (p == "gmr") {
        gmr::SolveOptions opts;
        if (cfg.max_level) {
            opts.max_level = cfg.max_level;
        }
        return from_solution(problems::solve_gmr(w, gmr_levels(cfg, w.size()), alg, opts));
    }
    if (p == "mixed-radix") {
        return from_solution(problems::solve_mixed_radix(w, {cfg.arities}, alg));
    }
    if (p == "reserved-given") {
        return from_solution(problems::solve_reserved_given(w, {radix_or(cfg, 2), cfg.lengths}, alg));
    }
    if (p == "reserved-g") {
        return from_solution(problems::solve_reserved_g(w, {radix_or(cfg, 2), cfg.g}, alg));
    }
    if (p == "huffman") {
        return from_solution(problems::solve_huffman_reference_adapter(w, radix_or(cfg, 2), alg));
    }
    if (p == "one-ended") {
        const one_ended::Result r =
            alg == gmr::Algorithm::Naive ? one_ended::solve_one_ended_naive(w) : one_ended::solve_one_ended(w);
        Outcome o;
        o.cost = r.cost;
        o.book = r.book;
        for (const auto& s : r.expansion) {
            o.expansion.emplace_back(s.m, s.b);
        }
        o.levels.assign(r.expansion.size() - 1, LevelParams{2, 1});
        o.cells = r.cells_updated;
        return o;
    }
    throw UsageError("unknown problem '" + p + "'");
}

Cost run_oracle(const RunConfig& cfg, const WeightSeq& w) {
    const std::string& p = cfg.problem;
    const std::size_t n = w.size();
    oracle::OracleBudget budget;
    // verify compares against the solver's full depth, up to n levels
    budget.max_level = std::max(budget.max_level, budget.max_n);
    if (n > budget.max_n && p != "huffman" && p != "one-ended") {
        throw Error(ErrorKind::BudgetExceeded, "n = " + std::to_string(n) + " is beyond the enumeration budget");
    }
    if (p == "gmr") {
        const LevelSpec spec = gmr_levels(cfg, n);
        const std::size_t depth = cfg.max_level ? cfg.max_level : std::min(n, spec.depth());
        return oracle::enumerate_gmr(w, spec, depth, budget);
    }
    if (p == "mixed-radix") {
        return oracle::enumerate_gmr(w, problems::mixed_radix_levels({cfg.arities}, n), n, budget);
    }
    if (p == "reserved-given") {
        const LevelSpec spec = problems::reserved_levels({radix_or(cfg, 2), cfg.lengths}, n);
        return oracle::enumerate_gmr(w, spec, std::min(n, spec.depth()), budget);
    }
    if (p == "reserved-g") {
        const ChoiceLevelSpec spec = problems::g_lengths_levels({radix_or(cfg, 2), cfg.g}, n);
        return oracle::enumerate_choice(w, spec, std::min(n, spec.depth()), budget);
    }
    if (p == "huffman") {
        return oracle::huffman_greedy(w, radix_or(cfg, 2));
    }
    if (p == "one-ended") {
        return oracle::enumerate_one_ended(w, budget);
    }
    throw UsageError("unknown problem '" + p + "'");
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    check_problem_flags(cfg);
    static const std::vector<std::string> modes{"cost", "code", "leafseq", "trace"};
    require(std::find(modes.begin(), modes.end(), cfg.output) != modes.end(),
            "--output must be cost, code, leafseq or trace");
    const gmr::Algorithm alg = parse_algorithm(cfg.algorithm);
    const WeightSeq w = normalize_weights(load_weights(cfg));
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = run_solver(cfg, w, alg);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    ordered_json doc;
    doc["problem"] = cfg.problem;
    doc["n"] = w.size();
    doc["cost"] = o.cost.value();
    doc["lengths"] = lengths_in_caller_order(o.book, w);
    const bool code = cfg.output == "code" || cfg.output == "trace";
    const bool leafseq = cfg.output == "leafseq" || cfg.output == "trace";
    if (code) {
        const std::vector<Codeword> words = in_caller_order(o.book, w);
        doc["codewords"] = format_codewords(words);
    }
    if (leafseq) {
        doc["leaf_sequence"] = o.book.leaves.counts();
    }
    if (cfg.output == "trace") {
        ordered_json levels = ordered_json::array();
        for (const LevelParams& lp : o.levels) {
            levels.push_back({lp.arity, lp.edge});
        }
        doc["levels"] = levels;
        doc["expansion"] = o.expansion;
    }
    doc["algorithm"] = algorithm_name(alg);
    doc["cells_updated"] = o.cells;
    if (!cfg.no_timing) {
        doc["elapsed"] = elapsed;
    }
    out << doc.dump(2) << '\n';
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    check_problem_flags(cfg);
    const gmr::Algorithm alg = parse_algorithm(cfg.algorithm);
    const WeightSeq w = normalize_weights(load_weights(cfg));
    const Cost oracle_cost = run_oracle(cfg, w);
    const Outcome o = run_solver(cfg, w, alg);
    const bool agree = o.cost == oracle_cost;
    ordered_json doc;
    doc["problem"] = cfg.problem;
    doc["n"] = w.size();
    doc["algorithm"] = algorithm_name(alg);
    doc["solver_cost"] = o.cost.value();
    doc["oracle_cost"] = oracle_cost.value();
    doc["agree"] = agree;
    out << doc.dump(2) << '\n';
    return agree ? 0 : 1;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, bool algorithm_given) {
    const auto problem = bench::parse_problem(cfg.problem.empty() ? "gmr" : cfg.problem);
    require(problem.has_value(), "unknown problem '" + cfg.problem + "'");
    const auto dist = bench::parse_distribution(cfg.distribution);
    require(dist.has_value(), "--distribution must be uniform, geometric or zipf");
    require(!cfg.sizes.empty(), "--sizes is empty");
    require(cfg.reps >= 1, "--reps must be at least 1");
    std::vector<gmr::Algorithm> algs{gmr::Algorithm::Naive, gmr::Algorithm::Batched};
    if (algorithm_given) {
        algs = {parse_algorithm(cfg.algorithm)};
    }

    out << "# problem=" << bench::to_string(*problem) << " distribution=" << bench::to_string(*dist)
        << " seed=" << cfg.seed << " reps=" << cfg.reps << '\n';
    out << "problem,algorithm,n,rep,cells_updated" << (cfg.no_timing ? "" : ",wall_time") << '\n';
    for (gmr::Algorithm alg : algs) {
        std::vector<std::pair<double, double>> points;
        for (std::size_t n : cfg.sizes) {
            require(n >= 1, "sizes must be positive");
            double total = 0;
            for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
                const std::uint64_t seed = cfg.seed + rep;
                const auto raw = bench::generate_weights(*dist, n, seed);
                const bench::Measurement m = bench::run_case(*problem, alg, raw, seed);
                out << bench::to_string(*problem) << ',' << algorithm_name(alg) << ',' << n << ',' << rep << ','
                    << m.cells;
                if (!cfg.no_timing) {
                    out << ',' << m.seconds;
                }
                out << '\n';
                total += static_cast<double>(m.cells);
            }
            points.emplace_back(static_cast<double>(n), total / static_cast<double>(cfg.reps));
        }
        if (const auto slope = bench::loglog_slope(points)) {
            std::ostringstream s;
            s.setf(std::ios::fixed);
            s.precision(3);
            s << *slope;
            out << "# slope," << bench::to_string(*problem) << ',' << algorithm_name(alg) << ',' << s.str() << '\n';
        }
    }
    return 0;
}

void add_problem_flags(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--problem", cfg.problem, "gmr, mixed-radix, reserved-given, reserved-g, one-ended, huffman");
    sub.add_option("--algorithm", cfg.algorithm, "naive or batched");
    sub.add_option("--radix", cfg.radix, "alphabet size (huffman, reserved-*)");
    sub.add_option("--lengths", cfg.lengths, "allowed codeword lengths")->delimiter(',');
    sub.add_option("--g", cfg.g, "number of distinct lengths allowed");
    sub.add_option("--spec", cfg.spec, "binary, ternary, quaternary or r:c on every level");
    sub.add_option("--levels", cfg.levels, "per-level r:c list, e.g. 2:1,3:2");
    sub.add_option("--spec-file", cfg.spec_file, "JSON array of [arity, edge] pairs");
    sub.add_option("--arities", cfg.arities, "mixed-radix arities t0,t1,...")->delimiter(',');
    sub.add_option("--weights", cfg.weights, "weights, whitespace separated or a JSON array");
    sub.add_option("--weights-file", cfg.weights_file, "file with weights");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal prefix-free codes over generalized mixed-radix trees"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* solve = app.add_subcommand("solve", "solve one instance, JSON on stdout");
    add_problem_flags(*solve, cfg);
    solve->add_option("--output", cfg.output, "cost, code, leafseq or trace");
    solve->add_option("--max-level", cfg.max_level, "deepest level for gmr");
    solve->add_flag("--no-timing", cfg.no_timing, "omit the elapsed field");

    CLI::App* verify = app.add_subcommand("verify", "compare the solver with the brute-force oracle");
    add_problem_flags(*verify, cfg);
    verify->add_option("--max-level", cfg.max_level, "deepest level for gmr");

    CLI::App* bench_cmd = app.add_subcommand("bench", "operation-count scaling, CSV on stdout");
    bench_cmd->add_option("--problem", cfg.problem, "problem family");
    CLI::Option* alg_opt = bench_cmd->add_option("--algorithm", cfg.algorithm, "naive or batched (default both)");
    bench_cmd->add_option("--sizes", cfg.sizes, "instance sizes")->delimiter(',');
    bench_cmd->add_option("--reps", cfg.reps, "instances per size");
    bench_cmd->add_option("--distribution", cfg.distribution, "uniform, geometric or zipf");
    bench_cmd->add_option("--seed", cfg.seed, "generator seed");
    bench_cmd->add_flag("--no-timing", cfg.no_timing, "omit the wall_time column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            require(!cfg.problem.empty(), "--problem is required");
            return cmd_solve(cfg, out);
        }
        if (verify->parsed()) {
            require(!cfg.problem.empty(), "--problem is required");
            return cmd_verify(cfg, out);
        }
        return cmd_bench(cfg, out, alg_opt->count() > 0);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
}

}  // namespace tdcode::cli
