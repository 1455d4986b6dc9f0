// Command-line front end: solve, bench, gen, validate.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arc/benchmark.hpp"
#include "arc/render_svg.hpp"
#include "arc/scenario_io.hpp"

namespace {

using namespace arc;

// A scenario argument is a file if one exists at that path, otherwise a
// family spec such as "row_swap(8)".
Scenario load_any(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        return load_scenario(arg);
    }
    try {
        return generate_scenario(parse_family(arg));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("'" + arg + "' is neither a scenario file nor a family spec (" + e.what() + ")");
    }
}

std::vector<std::string> split(const std::string& list) {
    std::vector<std::string> out;
    std::string item;
    int depth = 0;
    // Commas inside parentheses belong to the item.
    for (char c : list) {
        depth += c == '(' ? 1 : c == ')' ? -1 : 0;
        if (c == ',' && depth == 0) {
            out.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    if (!item.empty()) {
        out.push_back(item);
    }
    return out;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ARC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed ARC_SEED='" << env << "'\n";
        }
    }
    return 1;
}

struct Overrides {
    std::optional<std::size_t> sample_cap;
    bool no_completeness{false};

    void add_to(CLI::App* cmd) {
        cmd->add_option("--sample-cap", sample_cap, "Composite sample cap at global extent (0 = none)");
        cmd->add_flag("--no-completeness", no_completeness, "Stop composite PRM on stalls even at global extent");
    }
    [[nodiscard]] PlannerConfig apply(PlannerConfig c) const {
        if (sample_cap) {
            c.solver.global_sample_cap = *sample_cap;
        }
        if (no_completeness) {
            c.solver.completeness_mode = false;
        }
        return c;
    }
};

void print_report(const RunReport& r, bool verbose) {
    std::printf("planner   %s\nseed      %llu\noutcome   %s\ntime_s    %.3f\n", r.planner.c_str(),
                static_cast<unsigned long long>(r.seed), to_string(r.outcome).c_str(), r.planning_time);
    if (r.outcome == Outcome::solved) {
        std::printf("cost      %ld\n", r.cost);
    }
    std::printf("conflicts %zu (max level %d, expansions %d)\n", r.conflicts.size(), r.max_solver_level(),
                r.total_expansions());
    if (!r.message.empty()) {
        std::printf("note      %s\n", r.message.c_str());
    }
    if (!verbose) {
        return;
    }
    for (const ConflictRecord& c : r.conflicts) {
        std::printf("  t=%-4d robots", c.t);
        for (std::size_t robot : c.robots) {
            std::printf(" %zu", robot);
        }
        std::printf("  level %d  expansions %d  attempts", static_cast<int>(c.level), c.expansions);
        for (SolverLevel l : c.attempts) {
            std::printf(" %d", static_cast<int>(l));
        }
        std::printf("\n");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-robot motion planning with adaptive coordination"};
    app.require_subcommand(1);
    const std::uint64_t env_seed = default_seed();

    // solve
    std::string solve_scenario;
    std::string planner_name = "arc";
    std::uint64_t seed = env_seed;
    double deadline = 300;
    std::string out_svg;
    std::string out_json;
    Overrides solve_over;
    bool verbose = false;
    CLI::App* solve = app.add_subcommand("solve", "Plan one scenario");
    solve->add_option("scenario", solve_scenario, "Scenario file or family spec")->required();
    solve->add_option("--planner", planner_name, "arc, decoupled or composite")->capture_default_str();
    solve->add_option("--seed", seed, "Random seed (default: $ARC_SEED or 1)");
    solve->add_option("--deadline", deadline, "Planning budget in seconds (<= 0: none)")->capture_default_str();
    solve->add_option("--out-svg", out_svg, "Write an SVG picture");
    solve->add_option("--out-json", out_json, "Write the solution dump");
    solve->add_flag("-v,--verbose", verbose, "List every resolved conflict");
    solve_over.add_to(solve);

    // bench
    std::string bench_scenarios;
    std::string bench_planners = "arc,decoupled,composite";
    BenchOptions bench_opts;
    bench_opts.base_seed = env_seed;
    std::string csv_path;
    bool no_time = false;
    Overrides bench_over;
    CLI::App* bench = app.add_subcommand("bench", "Run a batch of trials and write a CSV");
    bench->add_option("--scenarios", bench_scenarios, "Comma-separated files or family specs")->required();
    bench->add_option("--planners", bench_planners, "Comma-separated planner names")->capture_default_str();
    bench->add_option("--trials", bench_opts.trials, "Trials per scenario and planner")->capture_default_str();
    bench->add_option("--deadline", bench_opts.deadline_s, "Per-trial budget in seconds")->capture_default_str();
    bench->add_option("--seed", bench_opts.base_seed, "Base seed; trial i uses seed + i");
    bench->add_option("--jobs", bench_opts.jobs, "Worker threads (0 = all cores)")->capture_default_str();
    bench->add_option("--csv", csv_path, "CSV output path (default: stdout)");
    bench->add_flag("--no-time", no_time, "Write NA for time_s so reruns compare byte for byte");
    bench_over.add_to(bench);

    // gen
    std::string family;
    std::optional<int> params;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "Write a built-in scenario to a file");
    gen->add_option("--family", family, "Family, optionally with n, e.g. warehouse(8)")->required();
    gen->add_option("--params", params, "Robot count n");
    gen->add_option("--out", gen_out, "Output path (default: stdout)");

    // validate
    std::string val_scenario;
    std::string val_solution;
    double max_step = RoadmapParams{}.max_step;
    CLI::App* validate = app.add_subcommand("validate", "Check a solution dump against a scenario");
    validate->add_option("scenario", val_scenario, "Scenario file or family spec")->required();
    validate->add_option("solution", val_solution, "Solution dump (JSON)")->required();
    validate->add_option("--max-step", max_step, "Per-timestep step bound")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            const Scenario sc = load_any(solve_scenario);
            const PlannerConfig config = solve_over.apply(sc.config.value_or(PlannerConfig{}));
            const PlanResult res = run_planner(parse_planner(planner_name), sc.problem, config, seed, deadline);
            print_report(res.report, verbose);
            if (!out_json.empty() && res.solution) {
                write_text(out_json, serialize_solution(sc.problem, *res.solution));
            }
            if (!out_svg.empty()) {
                write_svg(out_svg, sc.problem, res.solution ? &*res.solution : nullptr);
            }
            return res.report.outcome == Outcome::solved ? 0 : 1;
        }
        if (*bench) {
            std::vector<BenchScenario> scenarios;
            for (const std::string& item : split(bench_scenarios)) {
                Scenario sc = load_any(item);
                const PlannerConfig config = bench_over.apply(sc.config.value_or(PlannerConfig{}));
                scenarios.push_back({sc.name.empty() ? item : sc.name, std::move(sc.problem), config});
            }
            std::vector<PlannerKind> planners;
            for (const std::string& p : split(bench_planners)) {
                planners.push_back(parse_planner(p));
            }
            const auto records = run_benchmark(scenarios, planners, bench_opts);
            const std::string csv = to_csv(records, no_time);
            if (csv_path.empty()) {
                std::cout << csv;
            } else {
                write_text(csv_path, csv);
            }
            std::FILE* summary = csv_path.empty() ? stderr : stdout;
            std::fprintf(summary, "%-20s %-10s %8s %12s %12s\n", "scenario", "planner", "success", "time_s", "cost");
            for (const Aggregate& a : aggregate(records)) {
                std::fprintf(summary, "%-20s %-10s %3zu/%-4zu %6.2f±%-5.2f %6.0f±%-5.0f\n", a.scenario.c_str(),
                             a.planner.c_str(), a.solved, a.trials, a.time.mean, a.time.stddev, a.cost.mean,
                             a.cost.stddev);
            }
            return 0;
        }
        if (*gen) {
            FamilySpec spec = parse_family(family);
            if (params) {
                spec.n = *params;
            }
            const std::string text = serialize_scenario(generate_scenario(spec));
            if (gen_out.empty()) {
                std::cout << text;
            } else {
                write_text(gen_out, text);
            }
            return 0;
        }
        if (*validate) {
            const Scenario sc = load_any(val_scenario);
            const SolutionSet solution = parse_solution(read_text(val_solution));
            const ValidationResult v = validate_solution(sc.problem, solution, max_step);
            if (v.ok) {
                std::printf("valid (cost %ld)\n", sum_of_costs(solution));
                return 0;
            }
            std::printf("invalid: clause %c: %s\n", v.clause, v.message.c_str());
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
