#include <gtest/gtest.h>

#include <random>

#include "arc/roadmap.hpp"
#include "oracles.hpp"

using namespace arc;

namespace {

struct World {
    Environment env;
    std::vector<RobotModel> robots;
};

World one_disc(std::vector<Obstacle> obstacles = {}) {
    return {Environment({{0, 0}, {5, 5}}, std::move(obstacles)), {RobotModel::disc("d", 0.2)}};
}

}  // namespace

TEST(SampleUniform, DegenerateIntervalsArePinned) {
    Rng rng(1);
    const CSpaceRegion region{{{1.5, 1.5}, {-2, 2}}};
    for (int i = 0; i < 100; ++i) {
        const State q = sample_uniform(region, rng);
        EXPECT_EQ(q[0], 1.5);
        EXPECT_GE(q[1], -2);
        EXPECT_LE(q[1], 2);
    }
}

TEST(SampleUniform, DeterministicPerSeedAndUnbiased) {
    const CSpaceRegion region{{{0, 1}, {10, 30}}};
    Rng a(42);
    Rng b(42);
    double sum0 = 0;
    double sum1 = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const State qa = sample_uniform(region, a);
        EXPECT_EQ(qa, sample_uniform(region, b));
        sum0 += qa[0];
        sum1 += qa[1];
    }
    // Standard error of the mean is ~0.002 and ~0.04 respectively.
    EXPECT_NEAR(sum0 / n, 0.5, 0.01);
    EXPECT_NEAR(sum1 / n, 20, 0.2);
}

TEST(GrowRoadmap, ZeroSamplesDoNothing) {
    World w = one_disc();
    CompositeSpace space(w.env, w.robots, {0});
    Roadmap rm(space, space.full_region());
    Rng rng(3);
    const GrowthStats st = grow_roadmap(rm, rm.region(), 0, {}, rng);
    EXPECT_EQ(st.samples, 0u);
    EXPECT_EQ(rm.size(), 0u);
}

TEST(GrowRoadmap, EmptyWorldKeepsEverySample) {
    World w = one_disc();
    CompositeSpace space(w.env, w.robots, {0});
    Roadmap rm(space, space.full_region());
    Rng rng(3);
    const GrowthStats st = grow_roadmap(rm, rm.region(), 50, {}, rng);
    EXPECT_EQ(st.samples, 50u);
    EXPECT_GE(st.valid, 45u);
    EXPECT_EQ(rm.size(), st.valid);
}

TEST(GrowRoadmap, RegionInsideAnObstacleYieldsNothing) {
    World w = one_disc({make_rectangle({1, 1}, {3, 3})});
    CompositeSpace space(w.env, w.robots, {0});
    Roadmap rm(space, space.full_region());
    Rng rng(3);
    const GrowthStats st = grow_roadmap(rm, CSpaceRegion{{{1.5, 2.5}, {1.5, 2.5}}}, 200, {}, rng);
    EXPECT_EQ(st.valid, 0u);
    EXPECT_EQ(rm.size(), 0u);
    EXPECT_EQ(st.progress, 0u);
}

TEST(GrowRoadmap, EveryVertexAndEdgeRevalidates) {
    World w{Environment({{0, 0}, {5, 5}}, {make_rectangle({1, 1}, {4, 2}), Circle{{2.5, 3.8}, 0.6}}),
            {RobotModel::disc("d", 0.25), RobotModel::planar_arm("a", {4.2, 4.2}, {0.5, 0.4})}};
    for (const std::vector<std::size_t>& members : {std::vector<std::size_t>{0}, std::vector<std::size_t>{0, 1}}) {
        CompositeSpace space(w.env, w.robots, members);
        Roadmap rm(space, space.full_region());
        Rng rng(9);
        const RoadmapParams params;
        (void)grow_roadmap(rm, rm.region(), 300, params, rng);
        ASSERT_GT(rm.size(), 20u);
        std::size_t edges = 0;
        for (std::size_t i = 0; i < rm.size(); ++i) {
            EXPECT_TRUE(space.valid(rm.vertex(i)));
            EXPECT_TRUE(rm.region().contains(rm.vertex(i)));
            for (const RoadmapEdge& e : rm.neighbors(i)) {
                ++edges;
                EXPECT_TRUE(space.motion_valid(rm.vertex(i), rm.vertex(e.to), params.resolution, params.max_step));
                EXPECT_NEAR(e.weight, space.distance(rm.vertex(i), rm.vertex(e.to)), 1e-12);
                EXPECT_TRUE(rm.connected(i, e.to));
            }
        }
        EXPECT_EQ(edges, 2 * rm.edge_count());
    }
}

TEST(QueryPath, StartEqualsGoal) {
    World w = one_disc();
    CompositeSpace space(w.env, w.robots, {0});
    Roadmap rm(space, space.full_region());
    const State q{1, 1};
    const auto path = query_path(rm, q, q, {});
    ASSERT_TRUE(path.has_value());
    EXPECT_EQ(path->waypoints.size(), 1u);
}

TEST(QueryPath, DirectLinkOnAnEmptyRoadmap) {
    World w = one_disc();
    CompositeSpace space(w.env, w.robots, {0});
    Roadmap rm(space, space.full_region());
    const auto path = query_path(rm, State{1, 1}, State{2, 1}, {});
    ASSERT_TRUE(path.has_value());
    EXPECT_EQ(path->waypoints, (std::vector<State>{{1, 1}, {2, 1}}));
}

TEST(QueryPath, BlockedDirectLinkIsAbsent) {
    World w = one_disc({make_rectangle({1.4, 0}, {1.6, 5})});
    CompositeSpace space(w.env, w.robots, {0});
    Roadmap rm(space, space.full_region());
    EXPECT_FALSE(query_path(rm, State{1, 1}, State{2, 1}, {}).has_value());
}

TEST(QueryPath, InvalidEndpointThrows) {
    World w = one_disc({make_rectangle({1.4, 0}, {1.6, 5})});
    CompositeSpace space(w.env, w.robots, {0});
    Roadmap rm(space, space.full_region());
    EXPECT_THROW((void)query_path(rm, State{1.5, 1}, State{3, 1}, {}), std::invalid_argument);
}

TEST(QueryPath, GridCornerToCorner) {
    World w{Environment({{-1, -1}, {5, 5}}, {}), {RobotModel::disc("d", 0.1)}};
    CompositeSpace space(w.env, w.robots, {0});
    Roadmap rm(space, space.full_region());
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 5; ++x) {
            (void)rm.add_vertex(State{static_cast<double>(x), static_cast<double>(y)});
        }
    }
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 5; ++x) {
            const auto i = static_cast<std::size_t>(5 * y + x);
            if (x < 4) {
                rm.add_edge(i, i + 1, 1.0);
            }
            if (y < 4) {
                rm.add_edge(i, i + 5, 1.0);
            }
        }
    }
    const auto path = query_path(rm, State{0, 0}, State{4, 4}, {});
    ASSERT_TRUE(path.has_value());
    EXPECT_DOUBLE_EQ(path_length(space, *path), 8.0);
    EXPECT_EQ(path->waypoints.size(), 9u);
}

TEST(QueryPath, MatchesFloydWarshall) {
    std::mt19937_64 gen(31);
    std::uniform_int_distribution<int> count(5, 50);
    for (int trial = 0; trial < 40; ++trial) {
        World w = one_disc({make_rectangle({1.5, 0}, {1.8, 3.5}), Circle{{3.5, 3}, 0.7}});
        CompositeSpace space(w.env, w.robots, {0});
        Roadmap rm(space, space.full_region());
        Rng rng(gen());
        (void)grow_roadmap(rm, rm.region(), static_cast<std::size_t>(count(gen)), {}, rng);
        const auto d = oracle::floyd_warshall(rm);
        for (std::size_t i = 0; i < rm.size(); ++i) {
            for (std::size_t j = 0; j < rm.size(); ++j) {
                if (i == j) {
                    continue;
                }
                const auto path = query_path(rm, rm.vertex(i), rm.vertex(j), {});
                ASSERT_EQ(path.has_value(), std::isfinite(d[i][j]));
                if (path) {
                    EXPECT_NEAR(path_length(space, *path), d[i][j], 1e-9);
                }
            }
        }
    }
}

TEST(TimeParameterize, StepCounts) {
    World w = one_disc();
    w.robots.push_back(RobotModel::disc("e", 0.2));
    CompositeSpace one(w.env, w.robots, {0});
    const GeometricPath straight{{{0.5, 0.5}, {1.5, 0.5}}};
    EXPECT_EQ(time_parameterize(one, straight, 0.1).steps.size(), 11u);
    EXPECT_EQ(time_parameterize(one, straight, 0.25).steps.size(), 5u);
    EXPECT_EQ(time_parameterize(one, straight, 0.3).steps.size(), 5u);
    EXPECT_EQ(time_parameterize(one, GeometricPath{{{1, 1}}}, 0.1).steps.size(), 1u);
    EXPECT_THROW((void)time_parameterize(one, straight, 0.0), std::invalid_argument);

    // The robot that moves furthest sets the pace.
    CompositeSpace both(w.env, w.robots, {0, 1});
    const auto tp = time_parameterize(both, GeometricPath{{{0.5, 0.5, 3, 3}, {1.5, 0.5, 3.5, 3}}}, 0.1);
    ASSERT_EQ(tp.steps.size(), 11u);
    EXPECT_EQ(tp.robots, (std::vector<std::size_t>{0, 1}));
    EXPECT_NEAR(tp.steps[5][1][0], 3.25, 1e-12);
    EXPECT_EQ(tp.steps.back()[0], Configuration({1.5, 0.5}));
}

TEST(TimeParameterize, KeepsWaypoints) {
    World w = one_disc();
    CompositeSpace space(w.env, w.robots, {0});
    const GeometricPath p{{{0.5, 0.5}, {0.8, 0.5}, {0.8, 1.3}}};
    const auto tp = time_parameterize(space, p, 0.1);
    ASSERT_EQ(tp.steps.size(), 12u);
    EXPECT_EQ(tp.steps[3][0], Configuration({0.8, 0.5}));
    for (std::size_t k = 1; k < tp.steps.size(); ++k) {
        EXPECT_LE(cspace_distance(w.robots[0], tp.steps[k - 1][0], tp.steps[k][0]), 0.1 + 1e-12);
    }
}
