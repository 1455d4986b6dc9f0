// Batch experiments: every (scenario, planner, seed) trial runs on its own,
// results go to a CSV with a fixed column order.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arc/problem.hpp"

namespace arc {

enum class PlannerKind { arc, decoupled, composite };

[[nodiscard]] std::string to_string(PlannerKind kind);
/// "arc", "decoupled" or "composite"; throws std::invalid_argument otherwise.
[[nodiscard]] PlannerKind parse_planner(std::string_view name);

/// Runs one planner with a wall-clock budget (seconds; <= 0 means none).
[[nodiscard]] PlanResult run_planner(PlannerKind kind, const ProblemInstance& problem, const PlannerConfig& config,
                                     std::uint64_t seed, double deadline_s);

struct TrialRecord {
    std::string scenario;
    std::string planner;
    std::uint64_t seed{0};
    Outcome outcome{Outcome::failed};
    double time_s{0};
    /// Sum of costs; only meaningful when solved.
    long cost{0};
    std::size_t conflicts{0};
    int max_solver_level{0};
    /// Subproblem adaptations, summed over conflicts.
    int expansions{0};
};

struct BenchScenario {
    std::string name;
    ProblemInstance problem;
    PlannerConfig config;
};

struct BenchOptions {
    std::size_t trials{10};
    double deadline_s{300};
    std::uint64_t base_seed{1};
    /// Worker threads; 0 picks the hardware concurrency.
    std::size_t jobs{1};
};

/// Trial i of every (scenario, planner) pair uses seed base_seed + i.
/// Records come back ordered by scenario, planner, then trial.
[[nodiscard]] std::vector<TrialRecord> run_benchmark(std::span<const BenchScenario> scenarios,
                                                     std::span<const PlannerKind> planners,
                                                     const BenchOptions& options);

[[nodiscard]] std::string csv_header();
/// With `mask_time`, time_s is written as NA so reruns compare byte for byte.
[[nodiscard]] std::string to_csv_row(const TrialRecord& record, bool mask_time = false);
[[nodiscard]] std::string to_csv(std::span<const TrialRecord> records, bool mask_time = false);

struct MeanStd {
    double mean{0};
    /// Sample standard deviation (divides by n - 1); zero for fewer than two values.
    double stddev{0};
};

[[nodiscard]] MeanStd mean_stddev(std::span<const double> values);

struct Aggregate {
    std::string scenario;
    std::string planner;
    std::size_t trials{0};
    std::size_t solved{0};
    /// Over solved trials only; zero when none solved.
    MeanStd time;
    MeanStd cost;

    [[nodiscard]] double success_rate() const noexcept {
        return trials == 0 ? 0.0 : static_cast<double>(solved) / static_cast<double>(trials);
    }
};

/// One entry per (scenario, planner) in first-appearance order.
[[nodiscard]] std::vector<Aggregate> aggregate(std::span<const TrialRecord> records);

}  // namespace arc
