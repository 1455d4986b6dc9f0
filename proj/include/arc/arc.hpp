// Adaptive Robot Coordination: decoupled initial plans, then repeated
// conflict detection and local subproblem resolution.

#pragma once

#include <cstdint>

#include "arc/problem.hpp"
#include "arc/solvers.hpp"

namespace arc {

/// One individual roadmap per robot over its full C-space, grown in
/// batches of `config.initial_batch` until the robot's own query connects.
/// Also returns the resulting single-robot timed paths.
struct InitialPlans {
    IndividualRoadmaps roadmaps;
    SolutionSet paths;
};

[[nodiscard]] InitialPlans plan_individually(const ProblemInstance& problem, const PlannerConfig& config, Rng& rng,
                                             const Deadline& deadline);

/// Throws std::invalid_argument for an invalid instance or configuration.
/// A solved result always passes validate_solution.
[[nodiscard]] PlanResult arc_solve(const ProblemInstance& problem, const PlannerConfig& config, std::uint64_t seed,
                                   const Deadline& deadline = Deadline::none());

}  // namespace arc
