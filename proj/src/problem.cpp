#include "arc/problem.hpp"

#include <algorithm>
#include <string>

#include "arc/composite_space.hpp"

namespace arc {

void validate_instance(const ProblemInstance& problem) {
    if (problem.robots.empty()) {
        throw std::invalid_argument("problem has no robots");
    }
    if (problem.queries.size() != problem.robots.size()) {
        throw std::invalid_argument("problem needs exactly one query per robot");
    }
    const auto& robots = problem.robots;
    for (std::size_t i = 0; i < robots.size(); ++i) {
        const std::string who = "robot " + std::to_string(i) + " ('" + robots[i].name() + "')";
        for (const auto& [label, q] : {std::pair{"start", &problem.queries[i].start},
                                       std::pair{"goal", &problem.queries[i].goal}}) {
            if (q->size() != robots[i].dof()) {
                throw std::invalid_argument(who + ": " + label + " has " + std::to_string(q->size()) +
                                            " values, expected " + std::to_string(robots[i].dof()));
            }
            if (!is_valid_configuration(problem.env, robots[i], *q)) {
                throw std::invalid_argument(who + ": " + label + " configuration is in collision or out of range");
            }
        }
    }
    for (std::size_t i = 0; i < robots.size(); ++i) {
        for (std::size_t j = i + 1; j < robots.size(); ++j) {
            if (robots_in_collision(robots[i], problem.queries[i].start, robots[j], problem.queries[j].start)) {
                throw std::invalid_argument("robot " + std::to_string(j) + " ('" + robots[j].name() +
                                            "'): start collides with robot " + std::to_string(i));
            }
            if (robots_in_collision(robots[i], problem.queries[i].goal, robots[j], problem.queries[j].goal)) {
                throw std::invalid_argument("robot " + std::to_string(j) + " ('" + robots[j].name() +
                                            "'): goal collides with robot " + std::to_string(i));
            }
        }
    }
}

void validate_config(const PlannerConfig& c) {
    if (c.roadmap.k_neighbors < 1) {
        throw std::invalid_argument("k_neighbors must be >= 1");
    }
    if (!(c.roadmap.resolution > 0.0) || !(c.roadmap.max_step > 0.0)) {
        throw std::invalid_argument("resolution and max_step must be positive");
    }
    if (c.initial_batch < 1 || c.solver.decoupled_batch < 1 || c.solver.composite_batch < 1) {
        throw std::invalid_argument("sample batch sizes must be >= 1");
    }
    if (c.window < 1 || c.growth < 1) {
        throw std::invalid_argument("window and growth must be >= 1");
    }
    if (c.solver.progress_window < 1) {
        throw std::invalid_argument("progress window must be >= 1");
    }
    if (!(c.solver.stall_threshold > 0.0 && c.solver.stall_threshold < 1.0)) {
        throw std::invalid_argument("stall threshold must lie in (0, 1)");
    }
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::solved:
            return "solved";
        case Outcome::failed:
            return "failed";
        case Outcome::timeout:
            return "timeout";
    }
    return "unknown";
}

int RunReport::max_solver_level() const {
    int level = 0;
    for (const ConflictRecord& c : conflicts) {
        level = std::max(level, static_cast<int>(c.level));
    }
    return level;
}

int RunReport::total_expansions() const {
    int total = 0;
    for (const ConflictRecord& c : conflicts) {
        total += c.expansions;
    }
    return total;
}

namespace {

ValidationResult fail(char clause, std::string message) {
    return {false, clause, std::move(message)};
}

}  // namespace

ValidationResult validate_solution(const ProblemInstance& problem, const SolutionSet& paths, double max_step) {
    const auto& robots = problem.robots;
    const std::size_t n = robots.size();

    for (const TimedPath& p : paths.paths) {
        if (p.steps.empty() || p.robots.empty() || !std::is_sorted(p.robots.begin(), p.robots.end()) ||
            std::adjacent_find(p.robots.begin(), p.robots.end()) != p.robots.end()) {
            return fail('e', "malformed path (empty or unsorted robot set)");
        }
        for (std::size_t r : p.robots) {
            if (r >= n) {
                return fail('e', "path references unknown robot " + std::to_string(r));
            }
        }
        for (const auto& step : p.steps) {
            if (step.size() != p.robots.size()) {
                return fail('e', "path step has the wrong number of configurations");
            }
            for (std::size_t m = 0; m < step.size(); ++m) {
                if (step[m].size() != robots[p.robots[m]].dof()) {
                    return fail('c', "configuration dimension mismatch for robot " + std::to_string(p.robots[m]));
                }
            }
        }
    }

    // (a) endpoints
    const RobotTimelines timelines(paths, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!timelines.covers(r)) {
            return fail('a', "robot " + std::to_string(r) + " has no path");
        }
        const TimedPath& first = paths.paths[timelines.paths_of(r).front()];
        const TimedPath& last = paths.paths[timelines.paths_of(r).back()];
        if (first.steps.front()[first.slot(r)] != problem.queries[r].start) {
            return fail('a', "robot " + std::to_string(r) + " does not start at its start configuration");
        }
        if (last.steps.back()[last.slot(r)] != problem.queries[r].goal) {
            return fail('a', "robot " + std::to_string(r) + " does not end at its goal configuration");
        }
    }

    // (b) cross-path conflicts
    if (const auto c = find_first_conflict(paths, robots)) {
        return fail('b', "robots " + std::to_string(c->robot_i) + " and " + std::to_string(c->robot_j) +
                             " collide at t=" + std::to_string(c->t));
    }

    // (c) every stored configuration valid, including robot pairs inside one path
    for (std::size_t pi = 0; pi < paths.paths.size(); ++pi) {
        const TimedPath& p = paths.paths[pi];
        const CompositeSpace space(problem.env, robots, p.robots);
        for (std::size_t k = 0; k < p.steps.size(); ++k) {
            if (!space.valid(space.join(p.steps[k]))) {
                return fail('c', "path " + std::to_string(pi) + " is invalid at t=" + std::to_string(p.t_start + static_cast<int>(k)));
            }
        }
    }

    // (d) step bound
    const double bound = max_step * (1.0 + 1e-9);
    for (std::size_t pi = 0; pi < paths.paths.size(); ++pi) {
        const TimedPath& p = paths.paths[pi];
        for (std::size_t k = 1; k < p.steps.size(); ++k) {
            for (std::size_t m = 0; m < p.robots.size(); ++m) {
                const double d = cspace_distance(robots[p.robots[m]], p.steps[k - 1][m], p.steps[k][m]);
                if (d > bound) {
                    return fail('d', "robot " + std::to_string(p.robots[m]) + " moves " + std::to_string(d) +
                                         " at t=" + std::to_string(p.t_start + static_cast<int>(k)));
                }
            }
        }
    }

    // (e) composition changes: contiguous in time, identical handover configurations
    for (std::size_t r = 0; r < n; ++r) {
        const auto& list = timelines.paths_of(r);
        if (paths.paths[list.front()].t_start != 0) {
            return fail('e', "robot " + std::to_string(r) + " timeline does not start at t=0");
        }
        for (std::size_t i = 1; i < list.size(); ++i) {
            const TimedPath& pre = paths.paths[list[i - 1]];
            const TimedPath& post = paths.paths[list[i]];
            if (post.t_start != pre.t_end()) {
                return fail('e', "robot " + std::to_string(r) + " has a gap or overlap at t=" + std::to_string(post.t_start));
            }
            if (pre.steps.back()[pre.slot(r)] != post.steps.front()[post.slot(r)]) {
                return fail('e', "robot " + std::to_string(r) + " changes configuration across the composition change at t=" +
                                     std::to_string(post.t_start));
            }
        }
    }
    return {};
}

}  // namespace arc
