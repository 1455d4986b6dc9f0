// Single-robot search over the space-time expansion of a roadmap, avoiding
// robots whose trajectories are already fixed.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arc/problem.hpp"
#include "arc/roadmap.hpp"

namespace arc {

/// A fixed trajectory, one body per timestep from 0. After the last entry
/// the robot stays where it ended.
struct MovingObstacle {
    std::vector<Body> bodies;

    [[nodiscard]] const Body& at(int t) const {
        return bodies[static_cast<std::size_t>(std::min<int>(t, static_cast<int>(bodies.size()) - 1))];
    }
};

[[nodiscard]] MovingObstacle make_obstacle(const RobotModel& robot, const std::vector<Configuration>& trajectory);

struct SpaceTimeResult {
    /// One configuration per timestep from 0 to arrival.
    std::optional<std::vector<Configuration>> path;
    std::size_t expansions{0};
};

/// A* over (vertex, timestep) states of a single-robot roadmap. A state can
/// wait in place or traverse an edge, which takes as many timesteps as the
/// edge needs at max_step. Every intermediate timestep is checked against
/// every obstacle, including a swap check across consecutive timesteps.
/// The robot must be able to remain at the goal once all obstacles have
/// stopped. A negative horizon means "last obstacle timestep + 4 x the
/// obstacle-free step count + 4".
[[nodiscard]] SpaceTimeResult plan_space_time(const Roadmap& roadmap, const std::vector<char>* mask,
                                              std::span<const double> start, std::span<const double> goal,
                                              const std::vector<MovingObstacle>& obstacles, int horizon,
                                              const RoadmapParams& params, const Deadline& deadline);

}  // namespace arc
