// Robot models, configuration spaces and collision checking for disc robots
// and planar revolute arms in a 2D workspace.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "arc/geometry.hpp"

namespace arc {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultLinkHalfWidth = 0.05;
inline constexpr std::size_t kMaxLinks = 8;

struct Interval {
    double lo{0};
    double hi{0};

    [[nodiscard]] bool contains(double v) const noexcept { return lo <= v && v <= hi; }
    [[nodiscard]] bool contains(const Interval& o) const noexcept { return lo <= o.lo && o.hi <= hi; }
    [[nodiscard]] double width() const noexcept { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

using Obstacle = std::variant<Circle, ConvexPolygon>;

[[nodiscard]] Aabb obstacle_bounds(const Obstacle& o);

class Environment {
public:
    Environment() = default;
    /// Throws std::invalid_argument if the bounds are empty or an obstacle
    /// pokes outside them.
    Environment(Aabb bounds, std::vector<Obstacle> obstacles);

    [[nodiscard]] const Aabb& bounds() const noexcept { return bounds_; }
    [[nodiscard]] const std::vector<Obstacle>& obstacles() const noexcept { return obstacles_; }

    /// True iff the capsule lies fully inside the bounds and touches no obstacle.
    [[nodiscard]] bool capsule_free(const Capsule& c) const noexcept;

    friend bool operator==(const Environment& a, const Environment& b) {
        return a.bounds_ == b.bounds_ && a.obstacles_ == b.obstacles_;
    }

private:
    Aabb bounds_{{0, 0}, {1, 1}};
    std::vector<Obstacle> obstacles_;
    std::vector<Aabb> boxes_;
};

struct Disc {
    double radius{0};
    friend bool operator==(const Disc&, const Disc&) = default;
};

struct PlanarArm {
    Vec2 base;
    std::vector<double> link_lengths;
    std::vector<Interval> joint_limits;
    double link_half_width{kDefaultLinkHalfWidth};

    [[nodiscard]] double reach() const noexcept;
    friend bool operator==(const PlanarArm&, const PlanarArm&) = default;
};

class RobotModel {
public:
    using Kind = std::variant<Disc, PlanarArm>;

    [[nodiscard]] static RobotModel disc(std::string name, double radius);
    /// Joint limits default to [-pi, pi] for every joint.
    [[nodiscard]] static RobotModel planar_arm(std::string name, Vec2 base, std::vector<double> link_lengths,
                                               std::vector<Interval> joint_limits = {},
                                               double link_half_width = kDefaultLinkHalfWidth);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const Kind& kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_disc() const noexcept { return std::holds_alternative<Disc>(kind_); }
    [[nodiscard]] const Disc& as_disc() const { return std::get<Disc>(kind_); }
    [[nodiscard]] const PlanarArm& as_arm() const { return std::get<PlanarArm>(kind_); }

    [[nodiscard]] std::size_t dof() const noexcept;
    /// Metric weight applied to every DOF: 1 per meter for discs, total arm
    /// length per radian for arms.
    [[nodiscard]] double dof_weight() const noexcept;
    /// Disc radius, or arm reach plus link half-width.
    [[nodiscard]] double body_extent() const noexcept;
    /// Admissible range of DOF i: workspace bounds shrunk by the radius for
    /// discs, the joint limit for arms.
    [[nodiscard]] Interval dof_range(std::size_t i, const Environment& env) const;

    friend bool operator==(const RobotModel&, const RobotModel&) = default;

private:
    RobotModel(std::string name, Kind kind) : name_(std::move(name)), kind_(std::move(kind)) {}

    std::string name_;
    Kind kind_;
};

/// Point in one robot's C-space: (x, y) for a disc, joint angles for an arm.
struct Configuration {
    std::vector<double> values;

    Configuration() = default;
    Configuration(std::initializer_list<double> v) : values(v) {}
    explicit Configuration(std::vector<double> v) : values(std::move(v)) {}

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values[i]; }
    [[nodiscard]] std::span<const double> span() const noexcept { return values; }
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct CompositeConfiguration {
    std::vector<std::size_t> robots;
    std::vector<Configuration> configs;

    friend bool operator==(const CompositeConfiguration&, const CompositeConfiguration&) = default;
};

/// Axis-aligned box in a (possibly composite) C-space, one interval per DOF.
struct CSpaceRegion {
    std::vector<Interval> intervals;

    [[nodiscard]] std::size_t dim() const noexcept { return intervals.size(); }
    [[nodiscard]] bool contains(std::span<const double> q) const noexcept;
    [[nodiscard]] bool contains(const CSpaceRegion& other) const noexcept;
    friend bool operator==(const CSpaceRegion&, const CSpaceRegion&) = default;
};

struct Segment {
    Vec2 a;
    Vec2 b;
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Collision geometry of one robot at one configuration.
struct Body {
    std::array<Capsule, kMaxLinks> parts{};
    std::size_t count{0};
    Aabb box{};

    [[nodiscard]] const Capsule* begin() const noexcept { return parts.data(); }
    [[nodiscard]] const Capsule* end() const noexcept { return parts.data() + count; }
};

[[nodiscard]] Body body_of(const RobotModel& robot, std::span<const double> q);
[[nodiscard]] bool bodies_collide(const Body& a, const Body& b) noexcept;
[[nodiscard]] bool body_free(const Environment& env, const Body& body) noexcept;

/// One segment per link, chained from the base. Link i's absolute angle is
/// the running sum of joint values 1..i.
[[nodiscard]] std::vector<Segment> forward_kinematics(const RobotModel& arm, const Configuration& config);

/// Throws std::invalid_argument on a dimension mismatch. Arm joints outside
/// their limits make the configuration invalid (not an error).
[[nodiscard]] bool is_valid_configuration(const Environment& env, const RobotModel& robot,
                                          const Configuration& config);

[[nodiscard]] bool robots_in_collision(const RobotModel& robot_a, const Configuration& config_a,
                                       const RobotModel& robot_b, const Configuration& config_b);

[[nodiscard]] double cspace_distance(const RobotModel& robot, const Configuration& a, const Configuration& b);

/// Straight-line samples from a to b whose consecutive spacing under the
/// robot's metric never exceeds step. The endpoints are returned exactly.
[[nodiscard]] std::vector<Configuration> interpolate(const RobotModel& robot, const Configuration& a,
                                                     const Configuration& b, double step);

/// Number of equal intervals needed to cover `length` with pieces <= step.
[[nodiscard]] std::size_t interval_count(double length, double step) noexcept;

void check_dimension(const RobotModel& robot, std::span<const double> q);

}  // namespace arc
