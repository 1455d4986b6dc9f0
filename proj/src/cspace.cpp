#include "arc/cspace.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arc {

ConvexPolygon make_convex_polygon(std::vector<Vec2> vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) {
        throw std::invalid_argument("polygon needs at least 3 vertices");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = vertices[(i + 1) % n] - vertices[i];
        const Vec2 e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
        if (cross(e0, e1) <= 0.0) {
            throw std::invalid_argument("polygon must be strictly convex and counter-clockwise");
        }
    }
    // Strict left turns everywhere still admit star-shaped windings; the
    // total turning must be exactly one revolution.
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = vertices[(i + 1) % n] - vertices[i];
        const Vec2 e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
        turning += std::atan2(cross(e0, e1), dot(e0, e1));
    }
    if (std::abs(turning - 2.0 * kPi) > 1e-6) {
        throw std::invalid_argument("polygon is self-intersecting");
    }
    ConvexPolygon poly;
    poly.box = {vertices.front(), vertices.front()};
    for (const Vec2& v : vertices) {
        poly.box.lo = {std::min(poly.box.lo.x, v.x), std::min(poly.box.lo.y, v.y)};
        poly.box.hi = {std::max(poly.box.hi.x, v.x), std::max(poly.box.hi.y, v.y)};
    }
    poly.vertices = std::move(vertices);
    return poly;
}

ConvexPolygon make_rectangle(Vec2 lo, Vec2 hi) {
    return make_convex_polygon({lo, {hi.x, lo.y}, hi, {lo.x, hi.y}});
}

Aabb obstacle_bounds(const Obstacle& o) {
    return std::visit([](const auto& shape) { return shape.bounds(); }, o);
}

Environment::Environment(Aabb bounds, std::vector<Obstacle> obstacles)
    : bounds_(bounds), obstacles_(std::move(obstacles)) {
    if (!(bounds_.width() > 0.0) || !(bounds_.height() > 0.0)) {
        throw std::invalid_argument("environment bounds must have positive width and height");
    }
    boxes_.reserve(obstacles_.size());
    for (std::size_t i = 0; i < obstacles_.size(); ++i) {
        if (const auto* c = std::get_if<Circle>(&obstacles_[i]); c && !(c->radius > 0.0)) {
            throw std::invalid_argument("obstacle " + std::to_string(i) + ": circle radius must be positive");
        }
        const Aabb box = obstacle_bounds(obstacles_[i]);
        if (box.lo.x < bounds_.lo.x || box.lo.y < bounds_.lo.y || box.hi.x > bounds_.hi.x ||
            box.hi.y > bounds_.hi.y) {
            throw std::invalid_argument("obstacle " + std::to_string(i) + " lies outside the bounds");
        }
        boxes_.push_back(box);
    }
}

bool Environment::capsule_free(const Capsule& c) const noexcept {
    const double r = c.radius;
    for (const Vec2 p : {c.a, c.b}) {
        if (p.x - r < bounds_.lo.x || p.x + r > bounds_.hi.x || p.y - r < bounds_.lo.y ||
            p.y + r > bounds_.hi.y) {
            return false;
        }
    }
    const Aabb box = c.bounds();
    for (std::size_t i = 0; i < obstacles_.size(); ++i) {
        if (!box.overlaps(boxes_[i])) {
            continue;
        }
        const bool hit = std::visit(
            [&](const auto& shape) {
                using T = std::decay_t<decltype(shape)>;
                if constexpr (std::is_same_v<T, Circle>) {
                    return point_segment_distance(shape.center, c.a, c.b) < r + shape.radius;
                } else {
                    return segment_polygon_distance(c.a, c.b, shape) < r;
                }
            },
            obstacles_[i]);
        if (hit) {
            return false;
        }
    }
    return true;
}

double PlanarArm::reach() const noexcept {
    return std::accumulate(link_lengths.begin(), link_lengths.end(), 0.0);
}

RobotModel RobotModel::disc(std::string name, double radius) {
    if (!(radius > 0.0)) {
        throw std::invalid_argument("robot '" + name + "': disc radius must be positive");
    }
    return RobotModel(std::move(name), Disc{radius});
}

RobotModel RobotModel::planar_arm(std::string name, Vec2 base, std::vector<double> link_lengths,
                                  std::vector<Interval> joint_limits, double link_half_width) {
    if (link_lengths.empty() || link_lengths.size() > kMaxLinks) {
        throw std::invalid_argument("robot '" + name + "': arm needs 1.." + std::to_string(kMaxLinks) + " links");
    }
    for (double l : link_lengths) {
        if (!(l > 0.0)) {
            throw std::invalid_argument("robot '" + name + "': link lengths must be positive");
        }
    }
    if (joint_limits.empty()) {
        joint_limits.assign(link_lengths.size(), Interval{-kPi, kPi});
    }
    if (joint_limits.size() != link_lengths.size()) {
        throw std::invalid_argument("robot '" + name + "': one joint limit per link required");
    }
    for (const Interval& lim : joint_limits) {
        if (!(lim.lo <= lim.hi) || lim.lo < -kPi || lim.hi > kPi) {
            throw std::invalid_argument("robot '" + name + "': joint limits must be non-empty within [-pi, pi]");
        }
    }
    if (!(link_half_width > 0.0)) {
        throw std::invalid_argument("robot '" + name + "': link half-width must be positive");
    }
    return RobotModel(std::move(name),
                      PlanarArm{base, std::move(link_lengths), std::move(joint_limits), link_half_width});
}

std::size_t RobotModel::dof() const noexcept {
    return is_disc() ? 2 : as_arm().link_lengths.size();
}

double RobotModel::dof_weight() const noexcept {
    return is_disc() ? 1.0 : as_arm().reach();
}

double RobotModel::body_extent() const noexcept {
    return is_disc() ? as_disc().radius : as_arm().reach() + as_arm().link_half_width;
}

Interval RobotModel::dof_range(std::size_t i, const Environment& env) const {
    if (is_disc()) {
        // Centres closer than the radius to the boundary are never valid.
        const Aabb& b = env.bounds();
        const double r = as_disc().radius;
        Interval iv = i == 0 ? Interval{b.lo.x + r, b.hi.x - r} : Interval{b.lo.y + r, b.hi.y - r};
        if (iv.lo > iv.hi) {
            iv.lo = iv.hi = 0.5 * (iv.lo + iv.hi);
        }
        return iv;
    }
    return as_arm().joint_limits.at(i);
}

bool CSpaceRegion::contains(std::span<const double> q) const noexcept {
    if (q.size() != intervals.size()) {
        return false;
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!intervals[i].contains(q[i])) {
            return false;
        }
    }
    return true;
}

bool CSpaceRegion::contains(const CSpaceRegion& other) const noexcept {
    if (other.intervals.size() != intervals.size()) {
        return false;
    }
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (!intervals[i].contains(other.intervals[i])) {
            return false;
        }
    }
    return true;
}

void check_dimension(const RobotModel& robot, std::span<const double> q) {
    if (q.size() != robot.dof()) {
        throw std::invalid_argument("robot '" + robot.name() + "' expects " + std::to_string(robot.dof()) +
                                    " DOF values, got " + std::to_string(q.size()));
    }
}

Body body_of(const RobotModel& robot, std::span<const double> q) {
    Body body;
    if (robot.is_disc()) {
        const Vec2 c{q[0], q[1]};
        body.parts[0] = Capsule{c, c, robot.as_disc().radius};
        body.count = 1;
    } else {
        const PlanarArm& arm = robot.as_arm();
        Vec2 p = arm.base;
        double angle = 0.0;
        for (std::size_t i = 0; i < arm.link_lengths.size(); ++i) {
            angle += q[i];
            const Vec2 next{p.x + arm.link_lengths[i] * std::cos(angle), p.y + arm.link_lengths[i] * std::sin(angle)};
            body.parts[i] = Capsule{p, next, arm.link_half_width};
            p = next;
        }
        body.count = arm.link_lengths.size();
    }
    body.box = body.parts[0].bounds();
    for (std::size_t i = 1; i < body.count; ++i) {
        const Aabb b = body.parts[i].bounds();
        body.box.lo = {std::min(body.box.lo.x, b.lo.x), std::min(body.box.lo.y, b.lo.y)};
        body.box.hi = {std::max(body.box.hi.x, b.hi.x), std::max(body.box.hi.y, b.hi.y)};
    }
    return body;
}

bool bodies_collide(const Body& a, const Body& b) noexcept {
    if (!a.box.overlaps(b.box)) {
        return false;
    }
    for (const Capsule& p : a) {
        for (const Capsule& q : b) {
            if (capsules_overlap(p, q)) {
                return true;
            }
        }
    }
    return false;
}

bool body_free(const Environment& env, const Body& body) noexcept {
    for (const Capsule& c : body) {
        if (!env.capsule_free(c)) {
            return false;
        }
    }
    return true;
}

std::vector<Segment> forward_kinematics(const RobotModel& arm, const Configuration& config) {
    if (arm.is_disc()) {
        throw std::invalid_argument("forward_kinematics requires a planar arm");
    }
    check_dimension(arm, config.span());
    const Body body = body_of(arm, config.span());
    std::vector<Segment> out;
    out.reserve(body.count);
    for (const Capsule& c : body) {
        out.push_back({c.a, c.b});
    }
    return out;
}

bool is_valid_configuration(const Environment& env, const RobotModel& robot, const Configuration& config) {
    check_dimension(robot, config.span());
    if (!robot.is_disc()) {
        const auto& limits = robot.as_arm().joint_limits;
        for (std::size_t i = 0; i < config.size(); ++i) {
            if (!limits[i].contains(config[i])) {
                return false;
            }
        }
    }
    return body_free(env, body_of(robot, config.span()));
}

bool robots_in_collision(const RobotModel& robot_a, const Configuration& config_a, const RobotModel& robot_b,
                         const Configuration& config_b) {
    check_dimension(robot_a, config_a.span());
    check_dimension(robot_b, config_b.span());
    return bodies_collide(body_of(robot_a, config_a.span()), body_of(robot_b, config_b.span()));
}

double cspace_distance(const RobotModel& robot, const Configuration& a, const Configuration& b) {
    check_dimension(robot, a.span());
    check_dimension(robot, b.span());
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return robot.dof_weight() * std::sqrt(sum);
}

std::size_t interval_count(double length, double step) noexcept {
    if (!(length > 0.0)) {
        return 0;
    }
    // Absorb rounding noise so exact multiples do not gain an extra interval.
    const double ratio = length / step * (1.0 - 1e-12);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ratio)));
}

std::vector<Configuration> interpolate(const RobotModel& robot, const Configuration& a, const Configuration& b,
                                       double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("interpolate: step must be positive");
    }
    const double length = cspace_distance(robot, a, b);
    const std::size_t n = interval_count(length, step);
    std::vector<Configuration> out;
    out.reserve(n + 1);
    out.push_back(a);
    for (std::size_t i = 1; i < n; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(n);
        std::vector<double> v(a.size());
        for (std::size_t d = 0; d < a.size(); ++d) {
            v[d] = a[d] + s * (b[d] - a[d]);
        }
        out.emplace_back(std::move(v));
    }
    if (n > 0) {
        out.push_back(b);
    }
    return out;
}

}  // namespace arc
