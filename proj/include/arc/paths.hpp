// Timestep-indexed multi-robot paths, goal-wait semantics and conflict
// detection over solution sets that mix individual and composite paths.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arc/cspace.hpp"

namespace arc {

/// Path of a robot set over consecutive timesteps. steps[k][m] is the
/// configuration of robots[m] at timestep t_start + k.
struct TimedPath {
    std::vector<std::size_t> robots;
    int t_start{0};
    std::vector<std::vector<Configuration>> steps;

    [[nodiscard]] int t_end() const noexcept { return t_start + static_cast<int>(steps.size()) - 1; }
    [[nodiscard]] int duration() const noexcept { return static_cast<int>(steps.size()) - 1; }
    [[nodiscard]] bool contains(std::size_t robot) const noexcept;
    /// Index of `robot` within `robots`; throws std::invalid_argument if absent.
    [[nodiscard]] std::size_t slot(std::size_t robot) const;
    /// Per-robot configurations at t, clamped to the path's span.
    [[nodiscard]] const std::vector<Configuration>& step_at(int t) const;

    friend bool operator==(const TimedPath&, const TimedPath&) = default;
};

/// Clamped lookup: before t_start the first configuration, after t_end the
/// last one (robots wait at their endpoints).
[[nodiscard]] const Configuration& config_at(const TimedPath& path, std::size_t robot, int t);

struct SolutionSet {
    std::vector<TimedPath> paths;

    friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

/// Per-robot view of a solution set: which path holds a robot at a given
/// timestep. A robot is held by the path with the latest t_start <= t; before
/// its first path starts it is held by that first path, and after its last
/// path ends it waits at that path's final configuration.
class RobotTimelines {
public:
    RobotTimelines(const SolutionSet& solution, std::size_t robot_count);

    [[nodiscard]] std::size_t robot_count() const noexcept { return by_robot_.size(); }
    [[nodiscard]] bool covers(std::size_t robot) const { return !by_robot_.at(robot).empty(); }
    [[nodiscard]] std::size_t owner(std::size_t robot, int t) const;
    [[nodiscard]] const Configuration& config(std::size_t robot, int t) const;
    /// Final timestep of the robot's last path.
    [[nodiscard]] int end(std::size_t robot) const;
    [[nodiscard]] const std::vector<std::size_t>& paths_of(std::size_t robot) const { return by_robot_.at(robot); }
    [[nodiscard]] int horizon() const noexcept { return horizon_; }

private:
    const SolutionSet* solution_;
    std::vector<std::vector<std::size_t>> by_robot_;  // path indices sorted by t_start
    int horizon_{0};
};

struct Conflict {
    std::size_t path_i{0};
    std::size_t path_j{0};
    /// First colliding robot pair (robot_i in path_i, robot_j in path_j).
    std::size_t robot_i{0};
    std::size_t robot_j{0};
    CompositeConfiguration config_i;
    CompositeConfiguration config_j;
    int t{0};
};

/// Earliest timestep at which robots held by different paths collide; ties
/// go to the smallest (path_i, path_j) pair, then the smallest robot pair.
[[nodiscard]] std::optional<Conflict> find_first_conflict(const SolutionSet& solution,
                                                          std::span<const RobotModel> robots);

/// Sum over robots of the final timestep of each robot's last path.
[[nodiscard]] long sum_of_costs(const SolutionSet& solution);

}  // namespace arc
