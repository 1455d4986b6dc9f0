// Local subproblems around a conflict: robot-set merging, windowed local
// queries, region growth, and stitching local solutions back into the
// global solution set.

#pragma once

#include <cstddef>
#include <vector>

#include "arc/paths.hpp"
#include "arc/problem.hpp"

namespace arc {

struct Subproblem {
    /// R', sorted.
    std::vector<std::size_t> robots;
    /// E' over R''s DOFs in member order.
    CSpaceRegion region;
    /// Q', one entry per member of `robots`.
    std::vector<Configuration> starts;
    std::vector<Configuration> goals;
    int window{0};
    /// Conflict timestep the window is centred on.
    int anchor{0};
    /// Excised span [t_from, t_to] of the involved robots' timelines.
    int t_from{0};
    int t_to{0};
    std::vector<std::size_t> source_paths;
    /// E' and Q' equal the original problem restricted to R'.
    bool global{false};
    int expansions{0};

    [[nodiscard]] int excised_length() const noexcept { return t_to - t_from; }
};

/// Sorted union of the two conflicting paths' robot sets. A robot can appear
/// in both only if one path ends where the other begins (it moved on to a
/// later path); sharing a robot over an overlapping time span throws
/// std::logic_error.
[[nodiscard]] std::vector<std::size_t> merge_robot_sets(const Conflict& conflict, const SolutionSet& paths);

[[nodiscard]] Subproblem create_subproblem(const Conflict& conflict, const SolutionSet& paths,
                                           const ProblemInstance& problem, int w0, double max_step);

/// Widens the window by `growth` and recomputes Q' and E'. E' never shrinks.
[[nodiscard]] Subproblem adapt_subproblem(const Subproblem& sub, const SolutionSet& paths,
                                          const ProblemInstance& problem, int growth, double max_step);

/// Replaces the involved robots' timelines over [t_from, t_to] by `local`
/// and shifts their remaining suffixes. `local.robots` must equal
/// sub.robots and its endpoints must equal Q' exactly; otherwise
/// std::logic_error is thrown.
[[nodiscard]] SolutionSet stitch_solution(const SolutionSet& paths, const Subproblem& sub, const TimedPath& local);

}  // namespace arc
