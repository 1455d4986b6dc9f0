#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "arc/cspace.hpp"

using namespace arc;

namespace {

Environment box_env(double half) { return Environment({{-half, -half}, {half, half}}, {}); }

// Closest points between two segments by clamped parameter projection
// (the textbook approach, independent of the library's endpoint/intersection
// formulation).
double reference_segment_distance(Vec2 p1, Vec2 q1, Vec2 p2, Vec2 q2) {
    const Vec2 d1 = q1 - p1;
    const Vec2 d2 = q2 - p2;
    const Vec2 r = p1 - p2;
    const double a = dot(d1, d1);
    const double e = dot(d2, d2);
    const double f = dot(d2, r);
    double s = 0;
    double t = 0;
    if (a <= 1e-300 && e <= 1e-300) {
        return norm(r);
    }
    if (a <= 1e-300) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = dot(d1, r);
        if (e <= 1e-300) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = dot(d1, d2);
            const double denom = a * e - b * b;
            s = denom > 0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
            t = (b * s + f) / e;
            if (t < 0) {
                t = 0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1) {
                t = 1;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    return norm((p1 + s * d1) - (p2 + t * d2));
}

}  // namespace

TEST(ForwardKinematics, ZeroAngles) {
    const auto arm = RobotModel::planar_arm("a", {0, 0}, {1, 1});
    const auto segs = forward_kinematics(arm, {0, 0});
    ASSERT_EQ(segs.size(), 2u);
    EXPECT_EQ(segs[0], (Segment{{0, 0}, {1, 0}}));
    EXPECT_EQ(segs[1], (Segment{{1, 0}, {2, 0}}));
}

TEST(ForwardKinematics, QuarterTurn) {
    const auto arm = RobotModel::planar_arm("a", {0, 0}, {1, 1});
    const auto segs = forward_kinematics(arm, {kPi / 2, 0});
    EXPECT_NEAR(segs[0].b.x, 0, 1e-12);
    EXPECT_NEAR(segs[0].b.y, 1, 1e-12);
    EXPECT_NEAR(segs[1].b.x, 0, 1e-12);
    EXPECT_NEAR(segs[1].b.y, 2, 1e-12);
}

TEST(ForwardKinematics, RelativeJointAngles) {
    const auto arm = RobotModel::planar_arm("a", {0, 0}, {1, 1});
    const auto segs = forward_kinematics(arm, {kPi / 2, -kPi / 2});
    EXPECT_NEAR(segs[1].a.x, 0, 1e-12);
    EXPECT_NEAR(segs[1].a.y, 1, 1e-12);
    EXPECT_NEAR(segs[1].b.x, 1, 1e-12);
    EXPECT_NEAR(segs[1].b.y, 1, 1e-12);
}

TEST(ForwardKinematics, ChainIsContinuousAndChecksDimension) {
    const auto arm = RobotModel::planar_arm("a", {0.3, -0.2}, {0.6, 0.5, 0.4});
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < 100; ++i) {
        const auto segs = forward_kinematics(arm, {angle(rng), angle(rng), angle(rng)});
        EXPECT_EQ(segs[0].a, (Vec2{0.3, -0.2}));
        EXPECT_EQ(segs[0].b, segs[1].a);
        EXPECT_EQ(segs[1].b, segs[2].a);
    }
    EXPECT_THROW((void)forward_kinematics(arm, {0, 0}), std::invalid_argument);
}

TEST(Validity, DiscInEmptySpace) {
    EXPECT_TRUE(is_valid_configuration(box_env(5), RobotModel::disc("d", 0.5), {0, 0}));
}

TEST(Validity, DiscLeavingBounds) {
    EXPECT_FALSE(is_valid_configuration(box_env(5), RobotModel::disc("d", 0.5), {4.8, 0}));
}

TEST(Validity, DiscOverObstacle) {
    const Environment env({{-5, -5}, {5, 5}}, {make_rectangle({-0.25, -0.25}, {0.25, 0.25})});
    EXPECT_FALSE(is_valid_configuration(env, RobotModel::disc("d", 0.5), {0, 0}));
    EXPECT_TRUE(is_valid_configuration(env, RobotModel::disc("d", 0.5), {2, 2}));
}

TEST(Validity, CircleObstacleAndArmLimits) {
    const Environment env({{-5, -5}, {5, 5}}, {Circle{{3, 0}, 0.5}});
    const auto arm = RobotModel::planar_arm("a", {0, 0}, {1, 1}, {{-1, 1}, {-kPi, kPi}});
    EXPECT_TRUE(is_valid_configuration(env, arm, {0.5, 0}));
    EXPECT_FALSE(is_valid_configuration(env, arm, {1.5, 0}));  // joint limit
    const auto long_arm = RobotModel::planar_arm("b", {0, 0}, {1.5, 1.5});
    EXPECT_FALSE(is_valid_configuration(env, long_arm, {0, 0}));  // reaches the circle
}

TEST(Validity, DimensionMismatchThrows) {
    EXPECT_THROW((void)is_valid_configuration(box_env(5), RobotModel::disc("d", 0.5), {0, 0, 0}),
                 std::invalid_argument);
}

TEST(RobotCollision, DiscExamples) {
    const auto d = RobotModel::disc("d", 0.5);
    EXPECT_TRUE(robots_in_collision(d, {0, 0}, d, {0.9, 0}));
    EXPECT_FALSE(robots_in_collision(d, {0, 0}, d, {1.1, 0}));
}

TEST(RobotCollision, ArmsSharingTheirTips) {
    const auto a = RobotModel::planar_arm("a", {0, 0}, {1});
    const auto b = RobotModel::planar_arm("b", {2, 0}, {1});
    EXPECT_TRUE(robots_in_collision(a, {0}, b, {kPi}));
    EXPECT_FALSE(robots_in_collision(a, {kPi / 2}, b, {kPi / 2}));
}

TEST(RobotCollision, DiscDiscMatchesCentreDistanceOracle) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> pos(-3, 3);
    std::uniform_real_distribution<double> rad(0.05, 1.0);
    int disagreements = 0;
    for (int i = 0; i < 100000; ++i) {
        const double ra = rad(rng);
        const double rb = rad(rng);
        const double ax = pos(rng), ay = pos(rng), bx = pos(rng), by = pos(rng);
        const bool expected = std::sqrt((ax - bx) * (ax - bx) + (ay - by) * (ay - by)) < ra + rb;
        const bool got = robots_in_collision(RobotModel::disc("a", ra), {ax, ay}, RobotModel::disc("b", rb), {bx, by});
        disagreements += expected != got;
    }
    EXPECT_EQ(disagreements, 0);
}

TEST(RobotCollision, SymmetricForMixedBodies) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pos(-2, 2);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    const auto disc = RobotModel::disc("d", 0.3);
    const auto arm = RobotModel::planar_arm("a", {0, 0}, {0.8, 0.6});
    const auto arm2 = RobotModel::planar_arm("b", {0.7, 0.4}, {0.5, 0.5, 0.5});
    for (int i = 0; i < 2000; ++i) {
        const Configuration d{pos(rng), pos(rng)};
        const Configuration qa{angle(rng), angle(rng)};
        const Configuration qb{angle(rng), angle(rng), angle(rng)};
        EXPECT_EQ(robots_in_collision(disc, d, arm, qa), robots_in_collision(arm, qa, disc, d));
        EXPECT_EQ(robots_in_collision(arm2, qb, arm, qa), robots_in_collision(arm, qa, arm2, qb));
    }
}

TEST(Geometry, SegmentDistanceMatchesReference) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> c(-2, 2);
    for (int i = 0; i < 20000; ++i) {
        const Vec2 a0{c(rng), c(rng)}, a1{c(rng), c(rng)}, b0{c(rng), c(rng)}, b1{c(rng), c(rng)};
        EXPECT_NEAR(segment_segment_distance(a0, a1, b0, b1), reference_segment_distance(a0, a1, b0, b1), 1e-9);
    }
    // Degenerate and parallel cases.
    EXPECT_NEAR(segment_segment_distance({0, 0}, {0, 0}, {1, 0}, {1, 2}), 1.0, 1e-12);
    EXPECT_NEAR(segment_segment_distance({0, 0}, {2, 0}, {0, 1}, {2, 1}), 1.0, 1e-12);
    EXPECT_EQ(segment_segment_distance({0, 0}, {2, 0}, {1, 0}, {3, 0}), 0.0);
}

TEST(Geometry, PolygonValidation) {
    EXPECT_THROW((void)make_convex_polygon({{0, 0}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW((void)make_convex_polygon({{0, 0}, {0, 1}, {1, 0}}), std::invalid_argument);  // clockwise
    EXPECT_THROW((void)make_convex_polygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), std::invalid_argument);
    EXPECT_NO_THROW((void)make_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

TEST(Interpolate, QuarterSteps) {
    const auto d = RobotModel::disc("d", 0.1);
    const auto pts = interpolate(d, {0, 0}, {1, 0}, 0.25);
    ASSERT_EQ(pts.size(), 5u);
    for (int i = 0; i < 5; ++i) {
        EXPECT_NEAR(pts[static_cast<std::size_t>(i)][0], 0.25 * i, 1e-12);
    }
}

TEST(Interpolate, IdentityAndBadStep) {
    const auto d = RobotModel::disc("d", 0.1);
    EXPECT_EQ(interpolate(d, {0.5, 0.5}, {0.5, 0.5}, 0.1), std::vector<Configuration>{Configuration({0.5, 0.5})});
    EXPECT_THROW((void)interpolate(d, {0, 0}, {1, 0}, 0.0), std::invalid_argument);
    EXPECT_THROW((void)interpolate(d, {0, 0}, {1, 0}, -1.0), std::invalid_argument);
}

TEST(Interpolate, DiagonalSpacing) {
    const auto d = RobotModel::disc("d", 0.1);
    const auto pts = interpolate(d, {0, 0}, {0.3, 0.4}, 0.25);
    ASSERT_EQ(pts.size(), 3u);
    EXPECT_NEAR(cspace_distance(d, pts[0], pts[1]), 0.25, 1e-12);
    EXPECT_NEAR(cspace_distance(d, pts[1], pts[2]), 0.25, 1e-12);
}

TEST(Interpolate, ExactEndpointsAndUniformSpacing) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    const auto arm = RobotModel::planar_arm("a", {0, 0}, {0.6, 0.5, 0.4});
    for (int i = 0; i < 200; ++i) {
        const Configuration a{u(rng), u(rng), u(rng)};
        const Configuration b{u(rng), u(rng), u(rng)};
        const auto pts = interpolate(arm, a, b, 0.1);
        EXPECT_EQ(pts.front(), a);
        EXPECT_EQ(pts.back(), b);
        const double first = cspace_distance(arm, pts[0], pts[1]);
        for (std::size_t k = 1; k < pts.size(); ++k) {
            const double gap = cspace_distance(arm, pts[k - 1], pts[k]);
            EXPECT_LE(gap, 0.1 + 1e-12);
            EXPECT_NEAR(gap, first, first * 1e-6);
        }
    }
}

TEST(Distance, Examples) {
    const auto d = RobotModel::disc("d", 0.1);
    EXPECT_DOUBLE_EQ(cspace_distance(d, {0, 0}, {3, 4}), 5.0);
    EXPECT_DOUBLE_EQ(cspace_distance(d, {1, 2}, {1, 2}), 0.0);
    const auto arm = RobotModel::planar_arm("a", {0, 0}, {1, 1});
    EXPECT_NEAR(cspace_distance(arm, {0, 0}, {0.1, 0}), 0.2, 1e-12);
}

TEST(Distance, MetricAxioms) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    const auto arm = RobotModel::planar_arm("a", {0, 0}, {0.6, 0.5, 0.4});
    for (int i = 0; i < 1000; ++i) {
        const Configuration a{u(rng), u(rng), u(rng)};
        const Configuration b{u(rng), u(rng), u(rng)};
        const Configuration c{u(rng), u(rng), u(rng)};
        EXPECT_EQ(cspace_distance(arm, a, a), 0.0);
        EXPECT_NEAR(cspace_distance(arm, a, b), cspace_distance(arm, b, a), 1e-12);
        EXPECT_LE(cspace_distance(arm, a, c), cspace_distance(arm, a, b) + cspace_distance(arm, b, c) + 1e-9);
    }
}

TEST(DofRange, DiscShrinksBoundsByRadius) {
    const auto d = RobotModel::disc("d", 0.5);
    const Environment env({{0, 0}, {4, 2}}, {});
    EXPECT_EQ(d.dof_range(0, env), (Interval{0.5, 3.5}));
    EXPECT_EQ(d.dof_range(1, env), (Interval{0.5, 1.5}));
}
