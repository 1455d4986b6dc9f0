#include "arc/arc.hpp"

#include <chrono>
#include <stdexcept>

#include "arc/subproblem.hpp"

namespace arc {

InitialPlans plan_individually(const ProblemInstance& problem, const PlannerConfig& config, Rng& rng,
                               const Deadline& deadline) {
    InitialPlans out;
    out.roadmaps.reserve(problem.robots.size());
    for (std::size_t r = 0; r < problem.robots.size(); ++r) {
        CompositeSpace space(problem.env, problem.robots, {r});
        CSpaceRegion region = space.full_region();
        Roadmap& roadmap = out.roadmaps.emplace_back(std::move(space), region);
        while (true) {
            deadline.check();
            (void)grow_roadmap(roadmap, region, config.initial_batch, config.roadmap, rng);
            const auto& q = problem.queries[r];
            if (const auto path = query_path(roadmap, q.start.span(), q.goal.span(), config.roadmap)) {
                out.paths.paths.push_back(time_parameterize(roadmap.space(), *path, config.roadmap.max_step));
                break;
            }
        }
    }
    return out;
}

PlanResult arc_solve(const ProblemInstance& problem, const PlannerConfig& config, std::uint64_t seed,
                     const Deadline& deadline) {
    validate_instance(problem);
    validate_config(config);
    const auto t0 = std::chrono::steady_clock::now();
    PlanResult result;
    RunReport& report = result.report;
    report.planner = "arc";
    report.seed = seed;
    Rng rng(seed);
    try {
        InitialPlans initial = plan_individually(problem, config, rng, deadline);
        SolutionSet solution = std::move(initial.paths);
        while (const auto conflict = find_first_conflict(solution, problem.robots)) {
            deadline.check();
            const Subproblem sub = create_subproblem(*conflict, solution, problem, config.window, config.roadmap.max_step);
            SubproblemResult solved =
                solve_subproblem(problem, sub, solution, initial.roadmaps, config, rng, deadline);
            ConflictRecord record;
            record.t = conflict->t;
            record.robots = sub.robots;
            record.level = solved.level;
            record.expansions = solved.sub.expansions;
            record.attempts = std::move(solved.attempts);
            report.conflicts.push_back(std::move(record));
            if (!solved.path) {
                report.outcome = Outcome::failed;
                report.message = "conflict at t=" + std::to_string(conflict->t) + " unresolved at global extent";
                report.planning_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                return result;
            }
            solution = stitch_solution(solution, solved.sub, *solved.path);
        }
        const ValidationResult check = validate_solution(problem, solution, config.roadmap.max_step);
        if (!check.ok) {
            throw std::logic_error(std::string("ARC produced an invalid solution (clause ") + check.clause +
                                   "): " + check.message);
        }
        report.outcome = Outcome::solved;
        report.cost = sum_of_costs(solution);
        result.solution = std::move(solution);
    } catch (const DeadlineExceeded&) {
        report.outcome = Outcome::timeout;
        report.message = "deadline exceeded";
    }
    report.planning_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace arc
