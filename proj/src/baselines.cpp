#include "arc/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "arc/arc.hpp"
#include "arc/spacetime.hpp"

namespace arc {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void finish(PlanResult& result, const ProblemInstance& problem, SolutionSet solution, double max_step) {
    const ValidationResult check = validate_solution(problem, solution, max_step);
    if (!check.ok) {
        throw std::logic_error(result.report.planner + " produced an invalid solution (clause " +
                               std::string(1, check.clause) + "): " + check.message);
    }
    result.report.outcome = Outcome::solved;
    result.report.cost = sum_of_costs(solution);
    result.solution = std::move(solution);
}

}  // namespace

PlanResult decoupled_prm_baseline(const ProblemInstance& problem, const PlannerConfig& config, std::uint64_t seed,
                                  const Deadline& deadline) {
    validate_instance(problem);
    validate_config(config);
    const auto t0 = std::chrono::steady_clock::now();
    PlanResult result;
    result.report.planner = "decoupled";
    result.report.seed = seed;
    Rng rng(seed);
    try {
        InitialPlans initial = plan_individually(problem, config, rng, deadline);
        IndividualRoadmaps& roadmaps = initial.roadmaps;
        std::size_t batch = config.initial_batch;
        while (true) {
            std::vector<MovingObstacle> obstacles;
            SolutionSet solution;
            bool ok = true;
            for (std::size_t r = 0; r < problem.robots.size() && ok; ++r) {
                const Query& q = problem.queries[r];
                SpaceTimeResult res = plan_space_time(roadmaps[r], nullptr, q.start.span(), q.goal.span(), obstacles,
                                                      -1, config.roadmap, deadline);
                if (!res.path) {
                    ok = false;
                    break;
                }
                obstacles.push_back(make_obstacle(problem.robots[r], *res.path));
                TimedPath path;
                path.robots = {r};
                for (Configuration& c : *res.path) {
                    path.steps.push_back({std::move(c)});
                }
                solution.paths.push_back(std::move(path));
            }
            if (ok) {
                finish(result, problem, std::move(solution), config.roadmap.max_step);
                break;
            }
            const bool saturated = std::all_of(roadmaps.begin(), roadmaps.end(), [&](const Roadmap& m) {
                return m.size() >= config.baseline_max_vertices;
            });
            if (saturated) {
                result.report.outcome = Outcome::failed;
                result.report.message = "no prioritized plan within the roadmap size limit";
                break;
            }
            batch *= 2;
            for (Roadmap& roadmap : roadmaps) {
                deadline.check();
                const std::size_t room =
                    config.baseline_max_vertices > roadmap.size() ? config.baseline_max_vertices - roadmap.size() : 0;
                (void)grow_roadmap(roadmap, roadmap.region(), std::min(batch, room), config.roadmap, rng);
            }
        }
    } catch (const DeadlineExceeded&) {
        result.report.outcome = Outcome::timeout;
        result.report.message = "deadline exceeded";
    }
    result.report.planning_time = seconds_since(t0);
    return result;
}

PlanResult composite_prm_baseline(const ProblemInstance& problem, const PlannerConfig& config, std::uint64_t seed,
                                  const Deadline& deadline) {
    validate_instance(problem);
    validate_config(config);
    const auto t0 = std::chrono::steady_clock::now();
    PlanResult result;
    result.report.planner = "composite";
    result.report.seed = seed;
    Rng rng(seed);
    try {
        std::vector<std::size_t> all(problem.robots.size());
        for (std::size_t r = 0; r < all.size(); ++r) {
            all[r] = r;
        }
        const CompositeSpace space(problem.env, problem.robots, all);
        std::vector<Configuration> starts;
        std::vector<Configuration> goals;
        for (const Query& q : problem.queries) {
            starts.push_back(q.start);
            goals.push_back(q.goal);
        }
        const State start = space.join(starts);
        const State goal = space.join(goals);
        if (start == goal) {
            SolutionSet solution;
            solution.paths.push_back(time_parameterize(space, GeometricPath{{start}}, config.roadmap.max_step));
            finish(result, problem, std::move(solution), config.roadmap.max_step);
            result.report.planning_time = seconds_since(t0);
            return result;
        }
        const CSpaceRegion region = space.full_region();
        Roadmap roadmap(space, region);
        const std::size_t s = roadmap.insert(start, config.roadmap);
        const std::size_t g = roadmap.insert(goal, config.roadmap);
        const std::size_t cap = config.solver.global_sample_cap;
        std::size_t samples = 0;
        while (!roadmap.connected(s, g)) {
            deadline.check();
            if (cap > 0 && samples >= cap) {
                break;
            }
            const std::size_t n = cap > 0 ? std::min(config.solver.composite_batch, cap - samples)
                                          : config.solver.composite_batch;
            samples += grow_roadmap(roadmap, region, n, config.roadmap, rng).samples;
        }
        if (roadmap.connected(s, g)) {
            const auto path = query_path(roadmap, start, goal, config.roadmap);
            if (!path) {
                throw std::logic_error("composite roadmap connected but query failed");
            }
            SolutionSet solution;
            solution.paths.push_back(time_parameterize(space, *path, config.roadmap.max_step));
            finish(result, problem, std::move(solution), config.roadmap.max_step);
        } else {
            result.report.outcome = Outcome::failed;
            result.report.message = "sample cap reached";
        }
    } catch (const DeadlineExceeded&) {
        result.report.outcome = Outcome::timeout;
        result.report.message = "deadline exceeded";
    }
    result.report.planning_time = seconds_since(t0);
    return result;
}

}  // namespace arc
