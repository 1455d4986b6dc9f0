#include "arc/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "arc/arc.hpp"
#include "arc/baselines.hpp"

namespace arc {

std::string to_string(PlannerKind kind) {
    switch (kind) {
        case PlannerKind::arc:
            return "arc";
        case PlannerKind::decoupled:
            return "decoupled";
        case PlannerKind::composite:
            return "composite";
    }
    return "unknown";
}

PlannerKind parse_planner(std::string_view name) {
    if (name == "arc") {
        return PlannerKind::arc;
    }
    if (name == "decoupled") {
        return PlannerKind::decoupled;
    }
    if (name == "composite") {
        return PlannerKind::composite;
    }
    throw std::invalid_argument("unknown planner '" + std::string(name) + "' (expected arc, decoupled or composite)");
}

PlanResult run_planner(PlannerKind kind, const ProblemInstance& problem, const PlannerConfig& config,
                       std::uint64_t seed, double deadline_s) {
    const Deadline deadline = deadline_s > 0 ? Deadline(deadline_s) : Deadline::none();
    switch (kind) {
        case PlannerKind::arc:
            return arc_solve(problem, config, seed, deadline);
        case PlannerKind::decoupled:
            return decoupled_prm_baseline(problem, config, seed, deadline);
        case PlannerKind::composite:
            return composite_prm_baseline(problem, config, seed, deadline);
    }
    throw std::invalid_argument("unknown planner kind");
}

std::vector<TrialRecord> run_benchmark(std::span<const BenchScenario> scenarios, std::span<const PlannerKind> planners,
                                       const BenchOptions& options) {
    if (options.trials < 1) {
        throw std::invalid_argument("need at least one trial");
    }
    const std::size_t total = scenarios.size() * planners.size() * options.trials;
    std::vector<TrialRecord> records(total);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            const std::size_t trial = i % options.trials;
            const PlannerKind planner = planners[(i / options.trials) % planners.size()];
            const BenchScenario& sc = scenarios[i / (options.trials * planners.size())];
            const std::uint64_t seed = options.base_seed + trial;
            TrialRecord& rec = records[i];
            rec.scenario = sc.name;
            rec.planner = to_string(planner);
            rec.seed = seed;
            PlanResult res;
            try {
                res = run_planner(planner, sc.problem, sc.config, seed, options.deadline_s);
            } catch (const std::exception&) {
                rec.outcome = Outcome::failed;  // recorded, never raised
                continue;
            }
            rec.outcome = res.report.outcome;
            rec.time_s = res.report.planning_time;
            rec.cost = res.report.cost;
            rec.conflicts = res.report.conflicts.size();
            rec.max_solver_level = res.report.max_solver_level();
            rec.expansions = res.report.total_expansions();
        }
    };

    std::size_t jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
    jobs = std::min(jobs, total);
    if (jobs <= 1) {
        worker();
        return records;
    }
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    pool.clear();  // joins
    return records;
}

std::string csv_header() {
    return "scenario,planner,seed,outcome,time_s,cost,conflicts,max_solver_level,expansions\n";
}

namespace {

// Scenario names like "row_swap(8)" are safe, but quote anything odd.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_csv_row(const TrialRecord& r, bool mask_time) {
    char time[32] = "NA";
    if (!mask_time) {
        std::snprintf(time, sizeof time, "%.6f", r.time_s);
    }
    std::string row = csv_field(r.scenario) + "," + csv_field(r.planner) + "," + std::to_string(r.seed) + "," +
                      to_string(r.outcome) + "," + time + ",";
    row += r.outcome == Outcome::solved ? std::to_string(r.cost) : "NA";
    row += "," + std::to_string(r.conflicts) + "," + std::to_string(r.max_solver_level) + "," +
           std::to_string(r.expansions) + "\n";
    return row;
}

std::string to_csv(std::span<const TrialRecord> records, bool mask_time) {
    std::string out = csv_header();
    for (const TrialRecord& r : records) {
        out += to_csv_row(r, mask_time);
    }
    return out;
}

MeanStd mean_stddev(std::span<const double> values) {
    MeanStd out;
    if (values.empty()) {
        return out;
    }
    const double n = static_cast<double>(values.size());
    for (double v : values) {
        out.mean += v;
    }
    out.mean /= n;
    double ss = 0;
    for (double v : values) {
        ss += (v - out.mean) * (v - out.mean);
    }
    out.stddev = values.size() > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
    return out;
}

std::vector<Aggregate> aggregate(std::span<const TrialRecord> records) {
    std::vector<Aggregate> out;
    std::vector<std::vector<double>> times;
    std::vector<std::vector<double>> costs;
    for (const TrialRecord& r : records) {
        std::size_t k = 0;
        while (k < out.size() && !(out[k].scenario == r.scenario && out[k].planner == r.planner)) {
            ++k;
        }
        if (k == out.size()) {
            out.push_back({r.scenario, r.planner, 0, 0, {}, {}});
            times.emplace_back();
            costs.emplace_back();
        }
        ++out[k].trials;
        if (r.outcome == Outcome::solved) {
            ++out[k].solved;
            times[k].push_back(r.time_s);
            costs[k].push_back(static_cast<double>(r.cost));
        }
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].time = mean_stddev(times[k]);
        out[k].cost = mean_stddev(costs[k]);
    }
    return out;
}

}  // namespace arc
