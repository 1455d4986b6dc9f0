// Problem instances, planner configuration, deadlines and run reports shared
// by ARC and the baseline planners.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arc/cspace.hpp"
#include "arc/paths.hpp"
#include "arc/roadmap.hpp"

namespace arc {

struct Query {
    Configuration start;
    Configuration goal;
    friend bool operator==(const Query&, const Query&) = default;
};

struct ProblemInstance {
    Environment env;
    std::vector<RobotModel> robots;
    std::vector<Query> queries;

    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Throws std::invalid_argument naming the offending robot when a start or
/// goal is malformed, invalid, or collides with another robot's start/goal.
void validate_instance(const ProblemInstance& problem);

struct SolverConfig {
    /// Samples per robot per decoupled-PRM attempt.
    std::size_t decoupled_batch{20};
    std::size_t decoupled_attempts{3};
    /// Samples per composite-PRM batch.
    std::size_t composite_batch{50};
    /// Composite PRM gives up when the mean progress over the last
    /// `progress_window` batches drops below `stall_threshold`.
    std::size_t progress_window{5};
    double stall_threshold{0.05};
    /// At global extent, keep sampling without stall termination.
    bool completeness_mode{true};
    /// Sample cap for composite PRM at global extent; 0 means unbounded.
    std::size_t global_sample_cap{0};

    friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

struct PlannerConfig {
    RoadmapParams roadmap;
    /// Samples per round when growing an individual roadmap until its query connects.
    std::size_t initial_batch{100};
    int window{10};
    int growth{10};
    SolverConfig solver;
    /// Decoupled baseline: roadmaps stop growing (and the run fails) once
    /// every robot's roadmap has this many vertices.
    std::size_t baseline_max_vertices{4000};

    friend bool operator==(const PlannerConfig&, const PlannerConfig&) = default;
};

/// Throws std::invalid_argument on out-of-range parameters.
void validate_config(const PlannerConfig& config);

struct DeadlineExceeded : std::runtime_error {
    DeadlineExceeded() : std::runtime_error("planning deadline exceeded") {}
};

class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(double seconds)
        : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))),
          bounded_(true) {}

    [[nodiscard]] static Deadline none() { return {}; }
    [[nodiscard]] bool expired() const { return bounded_ && Clock::now() >= end_; }
    void check() const {
        if (expired()) {
            throw DeadlineExceeded();
        }
    }

private:
    Clock::time_point end_{};
    bool bounded_{false};
};

enum class Outcome { solved, failed, timeout };

[[nodiscard]] std::string to_string(Outcome o);

/// Hierarchy level that resolved a subproblem.
enum class SolverLevel { none = 0, prioritized_query = 1, decoupled_prm = 2, composite_prm = 3 };

struct ConflictRecord {
    int t{0};
    std::vector<std::size_t> robots;
    SolverLevel level{SolverLevel::none};
    int expansions{0};
    /// Levels attempted, in order, across all adaptation rounds.
    std::vector<SolverLevel> attempts;
};

struct RunReport {
    std::string planner;
    Outcome outcome{Outcome::failed};
    double planning_time{0};
    long cost{0};
    std::uint64_t seed{0};
    std::vector<ConflictRecord> conflicts;
    std::string message;

    [[nodiscard]] int max_solver_level() const;
    [[nodiscard]] int total_expansions() const;
};

struct PlanResult {
    std::optional<SolutionSet> solution;
    RunReport report;
};

struct ValidationResult {
    bool ok{true};
    /// 'a'..'e' for the first violated clause, 0 when valid.
    char clause{0};
    std::string message;
};

/// Checks endpoints (a), cross-path conflicts (b), configuration validity
/// including intra-path robot pairs (c), the per-timestep step bound (d) and
/// composition-change consistency (e), in that order.
[[nodiscard]] ValidationResult validate_solution(const ProblemInstance& problem, const SolutionSet& paths,
                                                 double max_step);

}  // namespace arc
