// The local solver hierarchy: prioritized query over existing roadmaps,
// decoupled PRM that samples more individual configurations, and composite
// PRM over the subproblem's joint C-space.

#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

#include "arc/problem.hpp"
#include "arc/roadmap.hpp"
#include "arc/subproblem.hpp"

namespace arc {

/// Sliding window of per-batch exploration gains for composite PRM.
class ProgressTracker {
public:
    ProgressTracker(std::size_t window, double threshold);

    void push(double gain);
    [[nodiscard]] std::size_t size() const noexcept { return gains_.size(); }
    [[nodiscard]] double mean() const noexcept;
    /// Full window and mean strictly below the threshold.
    [[nodiscard]] bool stalled() const noexcept;

private:
    std::size_t window_;
    double threshold_;
    std::deque<double> gains_;
};

/// Per-robot roadmaps over each robot's full C-space, indexed by robot.
using IndividualRoadmaps = std::vector<Roadmap>;

struct LocalSolve {
    std::optional<TimedPath> path;
    std::size_t expansions{0};
};

/// Plans the subproblem's robots one at a time in ascending index order over
/// their roadmaps restricted to E'. Returns a composite path over R' with
/// t_start = 0.
[[nodiscard]] LocalSolve prioritized_query(const ProblemInstance& problem, const Subproblem& sub,
                                           const IndividualRoadmaps& roadmaps, const RoadmapParams& params,
                                           const Deadline& deadline);

/// Up to `config.solver.decoupled_attempts` rounds of growing every involved
/// roadmap inside E' followed by a prioritized query. With zero attempts it
/// is a single prioritized query.
[[nodiscard]] LocalSolve decoupled_prm_solve(const ProblemInstance& problem, const Subproblem& sub,
                                             IndividualRoadmaps& roadmaps, const PlannerConfig& config, Rng& rng,
                                             const Deadline& deadline);

struct CompositeSolve {
    std::optional<TimedPath> path;
    std::size_t samples{0};
    std::size_t vertices{0};
    bool stalled{false};
};

/// Composite PRM over R' inside E'. Stops on success, on a stall (unless
/// the subproblem is global and completeness mode is on), or when a global
/// subproblem has used `global_sample_cap` samples (if nonzero).
[[nodiscard]] CompositeSolve composite_prm_solve(const ProblemInstance& problem, const Subproblem& sub,
                                                 const PlannerConfig& config, Rng& rng, const Deadline& deadline);

struct SubproblemResult {
    std::optional<TimedPath> path;
    /// The subproblem as it was when solved (or abandoned).
    Subproblem sub;
    SolverLevel level{SolverLevel::none};
    std::vector<SolverLevel> attempts;
    /// Space-time search node expansions, summed over all levels.
    std::size_t search_expansions{0};
};

/// Tries the three levels in order, adapting the subproblem after each
/// all-fail round. Returns no path only when the global subproblem fails.
[[nodiscard]] SubproblemResult solve_subproblem(const ProblemInstance& problem, const Subproblem& sub,
                                                const SolutionSet& paths, IndividualRoadmaps& roadmaps,
                                                const PlannerConfig& config, Rng& rng, const Deadline& deadline);

}  // namespace arc
