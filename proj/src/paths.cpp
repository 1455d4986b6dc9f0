#include "arc/paths.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace arc {

bool TimedPath::contains(std::size_t robot) const noexcept {
    return std::binary_search(robots.begin(), robots.end(), robot);
}

std::size_t TimedPath::slot(std::size_t robot) const {
    const auto it = std::lower_bound(robots.begin(), robots.end(), robot);
    if (it == robots.end() || *it != robot) {
        throw std::invalid_argument("robot " + std::to_string(robot) + " is not part of this path");
    }
    return static_cast<std::size_t>(it - robots.begin());
}

const std::vector<Configuration>& TimedPath::step_at(int t) const {
    if (steps.empty()) {
        throw std::logic_error("empty timed path");
    }
    const int k = std::clamp(t - t_start, 0, duration());
    return steps[static_cast<std::size_t>(k)];
}

const Configuration& config_at(const TimedPath& path, std::size_t robot, int t) {
    return path.step_at(t)[path.slot(robot)];
}

RobotTimelines::RobotTimelines(const SolutionSet& solution, std::size_t robot_count)
    : solution_(&solution), by_robot_(robot_count) {
    for (std::size_t p = 0; p < solution.paths.size(); ++p) {
        const TimedPath& path = solution.paths[p];
        horizon_ = std::max(horizon_, path.t_end());
        for (std::size_t r : path.robots) {
            by_robot_.at(r).push_back(p);
        }
    }
    for (auto& list : by_robot_) {
        std::stable_sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
            return solution.paths[a].t_start < solution.paths[b].t_start;
        });
    }
}

std::size_t RobotTimelines::owner(std::size_t robot, int t) const {
    const auto& list = by_robot_.at(robot);
    if (list.empty()) {
        throw std::invalid_argument("robot " + std::to_string(robot) + " has no path");
    }
    // Latest path whose start is <= t; the first path otherwise.
    auto it = std::upper_bound(list.begin(), list.end(), t,
                               [&](int time, std::size_t p) { return time < solution_->paths[p].t_start; });
    return it == list.begin() ? list.front() : *(it - 1);
}

const Configuration& RobotTimelines::config(std::size_t robot, int t) const {
    return config_at(solution_->paths[owner(robot, t)], robot, t);
}

int RobotTimelines::end(std::size_t robot) const {
    const auto& list = by_robot_.at(robot);
    if (list.empty()) {
        throw std::invalid_argument("robot " + std::to_string(robot) + " has no path");
    }
    return solution_->paths[list.back()].t_end();
}

std::optional<Conflict> find_first_conflict(const SolutionSet& solution, std::span<const RobotModel> robots) {
    const RobotTimelines timelines(solution, robots.size());
    std::vector<std::size_t> active;
    for (std::size_t r = 0; r < robots.size(); ++r) {
        if (timelines.covers(r)) {
            active.push_back(r);
        }
    }
    std::vector<Body> bodies(robots.size());
    std::vector<std::size_t> owners(robots.size());
    for (int t = 0; t <= timelines.horizon(); ++t) {
        for (std::size_t r : active) {
            owners[r] = timelines.owner(r, t);
            bodies[r] = body_of(robots[r], config_at(solution.paths[owners[r]], r, t).span());
        }
        std::optional<Conflict> best;
        for (std::size_t a = 0; a < active.size(); ++a) {
            for (std::size_t b = a + 1; b < active.size(); ++b) {
                const std::size_t ra = active[a];
                const std::size_t rb = active[b];
                if (owners[ra] == owners[rb] || !bodies_collide(bodies[ra], bodies[rb])) {
                    continue;
                }
                Conflict c;
                c.t = t;
                if (owners[ra] < owners[rb]) {
                    c.path_i = owners[ra];
                    c.path_j = owners[rb];
                    c.robot_i = ra;
                    c.robot_j = rb;
                } else {
                    c.path_i = owners[rb];
                    c.path_j = owners[ra];
                    c.robot_i = rb;
                    c.robot_j = ra;
                }
                const auto key = [](const Conflict& x) {
                    return std::tuple(x.path_i, x.path_j, std::min(x.robot_i, x.robot_j),
                                      std::max(x.robot_i, x.robot_j));
                };
                if (!best || key(c) < key(*best)) {
                    best = c;
                }
            }
        }
        if (best) {
            for (auto [path, out] : {std::pair{best->path_i, &best->config_i}, std::pair{best->path_j, &best->config_j}}) {
                out->robots = solution.paths[path].robots;
                out->configs = solution.paths[path].step_at(t);
            }
            return best;
        }
    }
    return std::nullopt;
}

long sum_of_costs(const SolutionSet& solution) {
    std::vector<std::pair<std::size_t, int>> last_end;
    for (const TimedPath& p : solution.paths) {
        for (std::size_t r : p.robots) {
            auto it = std::find_if(last_end.begin(), last_end.end(), [&](const auto& e) { return e.first == r; });
            if (it == last_end.end()) {
                last_end.emplace_back(r, p.t_end());
            } else {
                it->second = std::max(it->second, p.t_end());
            }
        }
    }
    long total = 0;
    for (const auto& [robot, end] : last_end) {
        total += end;
    }
    return total;
}

}  // namespace arc
