#include "arc/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "arc/spacetime.hpp"

namespace arc {

ProgressTracker::ProgressTracker(std::size_t window, double threshold) : window_(window), threshold_(threshold) {
    if (window_ < 1) {
        throw std::invalid_argument("progress window must be >= 1");
    }
}

void ProgressTracker::push(double gain) {
    gains_.push_back(std::clamp(gain, 0.0, 1.0));
    if (gains_.size() > window_) {
        gains_.pop_front();
    }
}

double ProgressTracker::mean() const noexcept {
    if (gains_.empty()) {
        return 0.0;
    }
    return std::accumulate(gains_.begin(), gains_.end(), 0.0) / static_cast<double>(gains_.size());
}

bool ProgressTracker::stalled() const noexcept {
    return gains_.size() == window_ && mean() < threshold_;
}

namespace {

// Slice of E' belonging to member k.
CSpaceRegion member_region(const ProblemInstance& problem, const Subproblem& sub, std::size_t k) {
    std::size_t offset = 0;
    for (std::size_t j = 0; j < k; ++j) {
        offset += problem.robots[sub.robots[j]].dof();
    }
    const std::size_t dof = problem.robots[sub.robots[k]].dof();
    CSpaceRegion out;
    out.intervals.assign(sub.region.intervals.begin() + static_cast<std::ptrdiff_t>(offset),
                         sub.region.intervals.begin() + static_cast<std::ptrdiff_t>(offset + dof));
    return out;
}

TimedPath assemble(const std::vector<std::size_t>& robots, const std::vector<std::vector<Configuration>>& trajectories) {
    std::size_t length = 0;
    for (const auto& tr : trajectories) {
        length = std::max(length, tr.size());
    }
    TimedPath out;
    out.robots = robots;
    out.steps.resize(length);
    for (std::size_t t = 0; t < length; ++t) {
        for (const auto& tr : trajectories) {
            out.steps[t].push_back(tr[std::min(t, tr.size() - 1)]);
        }
    }
    return out;
}

}  // namespace

LocalSolve prioritized_query(const ProblemInstance& problem, const Subproblem& sub, const IndividualRoadmaps& roadmaps,
                             const RoadmapParams& params, const Deadline& deadline) {
    LocalSolve out;
    const int horizon = 4 * (sub.window + sub.excised_length());
    std::vector<MovingObstacle> obstacles;
    std::vector<std::vector<Configuration>> trajectories;
    for (std::size_t k = 0; k < sub.robots.size(); ++k) {
        const std::size_t r = sub.robots[k];
        const Roadmap& roadmap = roadmaps.at(r);
        std::vector<char> mask;
        if (!sub.global) {
            const CSpaceRegion region = member_region(problem, sub, k);
            mask.resize(roadmap.size());
            for (std::size_t i = 0; i < roadmap.size(); ++i) {
                mask[i] = region.contains(roadmap.vertex(i)) ? 1 : 0;
            }
        }
        SpaceTimeResult res = plan_space_time(roadmap, sub.global ? nullptr : &mask, sub.starts[k].span(),
                                              sub.goals[k].span(), obstacles, horizon, params, deadline);
        out.expansions += res.expansions;
        if (!res.path) {
            return out;
        }
        obstacles.push_back(make_obstacle(problem.robots[r], *res.path));
        trajectories.push_back(std::move(*res.path));
    }
    out.path = assemble(sub.robots, trajectories);
    return out;
}

LocalSolve decoupled_prm_solve(const ProblemInstance& problem, const Subproblem& sub, IndividualRoadmaps& roadmaps,
                               const PlannerConfig& config, Rng& rng, const Deadline& deadline) {
    if (config.solver.decoupled_attempts == 0) {
        return prioritized_query(problem, sub, roadmaps, config.roadmap, deadline);
    }
    LocalSolve out;
    for (std::size_t attempt = 0; attempt < config.solver.decoupled_attempts; ++attempt) {
        for (std::size_t k = 0; k < sub.robots.size(); ++k) {
            Roadmap& roadmap = roadmaps.at(sub.robots[k]);
            const CSpaceRegion region = sub.global ? roadmap.region() : member_region(problem, sub, k);
            (void)grow_roadmap(roadmap, region, config.solver.decoupled_batch, config.roadmap, rng);
        }
        deadline.check();
        LocalSolve res = prioritized_query(problem, sub, roadmaps, config.roadmap, deadline);
        out.expansions += res.expansions;
        if (res.path) {
            out.path = std::move(res.path);
            return out;
        }
    }
    return out;
}

CompositeSolve composite_prm_solve(const ProblemInstance& problem, const Subproblem& sub, const PlannerConfig& config,
                                   Rng& rng, const Deadline& deadline) {
    CompositeSolve out;
    const CompositeSpace space(problem.env, problem.robots, sub.robots);
    const State start = space.join(sub.starts);
    const State goal = space.join(sub.goals);
    if (start == goal) {
        out.path = time_parameterize(space, GeometricPath{{start}}, config.roadmap.max_step);
        return out;
    }
    Roadmap roadmap(space, sub.region);
    const std::size_t s = roadmap.insert(start, config.roadmap);
    const std::size_t g = roadmap.insert(goal, config.roadmap);
    ProgressTracker tracker(config.solver.progress_window, config.solver.stall_threshold);
    const bool unbounded = sub.global && config.solver.completeness_mode;
    const std::size_t batch = config.solver.composite_batch;
    while (!roadmap.connected(s, g)) {
        deadline.check();
        if (sub.global && config.solver.global_sample_cap > 0 && out.samples >= config.solver.global_sample_cap) {
            out.vertices = roadmap.size();
            return out;
        }
        std::size_t n = batch;
        if (sub.global && config.solver.global_sample_cap > 0) {
            n = std::min(n, config.solver.global_sample_cap - out.samples);
        }
        const GrowthStats stats = grow_roadmap(roadmap, sub.region, n, config.roadmap, rng);
        out.samples += stats.samples;
        tracker.push(static_cast<double>(stats.progress) / static_cast<double>(n));
        if (!unbounded && tracker.stalled() && !roadmap.connected(s, g)) {
            out.stalled = true;
            out.vertices = roadmap.size();
            return out;
        }
    }
    out.vertices = roadmap.size();
    const auto path = query_path(roadmap, start, goal, config.roadmap);
    if (!path) {
        throw std::logic_error("composite roadmap connected but query failed");
    }
    out.path = time_parameterize(space, *path, config.roadmap.max_step);
    return out;
}

SubproblemResult solve_subproblem(const ProblemInstance& problem, const Subproblem& sub, const SolutionSet& paths,
                                  IndividualRoadmaps& roadmaps, const PlannerConfig& config, Rng& rng,
                                  const Deadline& deadline) {
    SubproblemResult out;
    out.sub = sub;
    while (true) {
        out.attempts.push_back(SolverLevel::prioritized_query);
        LocalSolve first = prioritized_query(problem, out.sub, roadmaps, config.roadmap, deadline);
        out.search_expansions += first.expansions;
        if (first.path) {
            out.path = std::move(first.path);
            out.level = SolverLevel::prioritized_query;
            return out;
        }

        out.attempts.push_back(SolverLevel::decoupled_prm);
        LocalSolve second = decoupled_prm_solve(problem, out.sub, roadmaps, config, rng, deadline);
        out.search_expansions += second.expansions;
        if (second.path) {
            out.path = std::move(second.path);
            out.level = SolverLevel::decoupled_prm;
            return out;
        }

        out.attempts.push_back(SolverLevel::composite_prm);
        CompositeSolve third = composite_prm_solve(problem, out.sub, config, rng, deadline);
        if (third.path) {
            out.path = std::move(third.path);
            out.level = SolverLevel::composite_prm;
            return out;
        }

        if (out.sub.global) {
            return out;
        }
        out.sub = adapt_subproblem(out.sub, paths, problem, config.growth, config.roadmap.max_step);
    }
}

}  // namespace arc
