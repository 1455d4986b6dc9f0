#include <gtest/gtest.h>

#include <random>

#include "arc/problem.hpp"
#include "oracles.hpp"

using namespace arc;

namespace {

TimedPath single(std::size_t robot, int t_start, std::vector<Configuration> configs) {
    TimedPath p;
    p.robots = {robot};
    p.t_start = t_start;
    for (auto& c : configs) {
        p.steps.push_back({std::move(c)});
    }
    return p;
}

// Straight single-robot path sampled at exactly `step` per timestep.
TimedPath line(std::size_t robot, Vec2 from, Vec2 to, int steps) {
    std::vector<Configuration> cs;
    for (int k = 0; k <= steps; ++k) {
        const double s = static_cast<double>(k) / steps;
        cs.push_back({from.x + s * (to.x - from.x), from.y + s * (to.y - from.y)});
    }
    return single(robot, 0, std::move(cs));
}

ProblemInstance two_discs() {
    ProblemInstance p{Environment({{0, 0}, {4, 4}}, {}), {}, {}};
    p.robots = {RobotModel::disc("a", 0.3), RobotModel::disc("b", 0.3)};
    p.queries = {{{0.5, 0.5}, {1.5, 0.5}}, {{0.5, 3.5}, {1.5, 3.5}}};
    return p;
}

SolutionSet valid_two_disc_solution() {
    return {{line(0, {0.5, 0.5}, {1.5, 0.5}, 10), line(1, {0.5, 3.5}, {1.5, 3.5}, 10)}};
}

}  // namespace

TEST(ConfigAt, ClampsToThePathSpan) {
    const TimedPath p = single(3, 2, {{0, 0}, {1, 0}, {2, 0}});
    EXPECT_EQ(config_at(p, 3, 0), Configuration({0, 0}));
    EXPECT_EQ(config_at(p, 3, 2), Configuration({0, 0}));
    EXPECT_EQ(config_at(p, 3, 3), Configuration({1, 0}));
    EXPECT_EQ(config_at(p, 3, 4), Configuration({2, 0}));
    EXPECT_EQ(config_at(p, 3, 100), Configuration({2, 0}));
    EXPECT_THROW((void)config_at(p, 1, 3), std::invalid_argument);
}

TEST(ConfigAt, CompositePathSlots) {
    TimedPath p;
    p.robots = {1, 4};
    p.steps = {{{0, 0}, {5, 5}}, {{1, 0}, {5, 4}}};
    EXPECT_EQ(config_at(p, 4, 1), Configuration({5, 4}));
    EXPECT_EQ(config_at(p, 1, 1), Configuration({1, 0}));
}

TEST(FirstConflict, NoneForSeparatedRobots) {
    const auto robots = two_discs().robots;
    EXPECT_FALSE(find_first_conflict(valid_two_disc_solution(), robots).has_value());
}

TEST(FirstConflict, HeadOnSwapCollidesMidway) {
    const std::vector<RobotModel> robots{RobotModel::disc("a", 0.3), RobotModel::disc("b", 0.3)};
    const SolutionSet s{{line(0, {0, 0}, {4, 0}, 10), line(1, {4, 0}, {0, 0}, 10)}};
    const auto c = find_first_conflict(s, robots);
    ASSERT_TRUE(c.has_value());
    // Centres at 0.4t and 4 - 0.4t; they first come within 0.6 at t = 5.
    EXPECT_EQ(c->t, 5);
    EXPECT_EQ(c->robot_i, 0u);
    EXPECT_EQ(c->robot_j, 1u);
    EXPECT_EQ(c->config_i.configs.front(), Configuration({2, 0}));
}

TEST(FirstConflict, RobotWaitingAtGoalStillCollides) {
    const std::vector<RobotModel> robots{RobotModel::disc("a", 0.3), RobotModel::disc("b", 0.3)};
    // Robot 0 reaches (2,0) at t=2 and waits; robot 1 arrives there at t=8.
    const SolutionSet s{{line(0, {0, 0}, {2, 0}, 2), line(1, {2, 4}, {2, 0}, 8)}};
    const auto c = find_first_conflict(s, robots);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->t, 7);  // distance 0.5 < 0.6
}

TEST(FirstConflict, SameCompositePathIsNotAConflict) {
    const std::vector<RobotModel> robots{RobotModel::disc("a", 0.3), RobotModel::disc("b", 0.3)};
    TimedPath p;
    p.robots = {0, 1};
    p.steps = {{{0, 0}, {0.1, 0}}};
    EXPECT_FALSE(find_first_conflict({{p}}, robots).has_value());
}

TEST(FirstConflict, MatchesExhaustiveChecker) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> count(2, 4);
    std::uniform_real_distribution<double> unit(0, 1);
    int conflicts = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<RobotModel> robots;
        const int n = count(rng);
        for (int r = 0; r < n; ++r) {
            if (unit(rng) < 0.7) {
                robots.push_back(RobotModel::disc("d", 0.2 + 0.3 * unit(rng)));
            } else {
                robots.push_back(RobotModel::planar_arm("a", {4 * unit(rng), 4 * unit(rng)}, {0.8, 0.6}));
            }
        }
        const SolutionSet s = oracle::random_solution_set(rng, robots, 30);
        const auto expected = oracle::exhaustive_first_conflict(s, robots);
        const auto got = find_first_conflict(s, robots);
        ASSERT_EQ(expected.has_value(), got.has_value()) << "trial " << trial;
        if (expected) {
            ++conflicts;
            EXPECT_EQ(got->t, expected->t);
            EXPECT_EQ(got->path_i, expected->path_i);
            EXPECT_EQ(got->path_j, expected->path_j);
            EXPECT_EQ(got->robot_i, expected->robot_i);
            EXPECT_EQ(got->robot_j, expected->robot_j);
        }
    }
    // Both outcomes must be exercised.
    EXPECT_GT(conflicts, 30);
    EXPECT_LT(conflicts, 270);
}

TEST(SumOfCosts, Examples) {
    EXPECT_EQ(sum_of_costs(valid_two_disc_solution()), 20);
    // Robot 0 handed over to a composite path that ends at t=15.
    SolutionSet s{{line(0, {0, 0}, {1, 0}, 5)}};
    TimedPath joint;
    joint.robots = {0, 1};
    joint.t_start = 5;
    for (int t = 5; t <= 15; ++t) {
        joint.steps.push_back({{1, 0}, {3, 3}});
    }
    s.paths.push_back(joint);
    EXPECT_EQ(sum_of_costs(s), 30);
    EXPECT_EQ(sum_of_costs({}), 0);
}

TEST(Validator, AcceptsAValidSolution) {
    const auto v = validate_solution(two_discs(), valid_two_disc_solution(), 0.1);
    EXPECT_TRUE(v.ok) << v.message;
    EXPECT_EQ(v.clause, 0);
}

TEST(Validator, WrongGoalIsClauseA) {
    auto s = valid_two_disc_solution();
    s.paths[0].steps.back()[0] = {1.45, 0.5};
    EXPECT_EQ(validate_solution(two_discs(), s, 0.1).clause, 'a');
}

TEST(Validator, CrossPathCollisionIsClauseB) {
    ProblemInstance p = two_discs();
    p.queries[1] = {{1.5, 0.5}, {0.5, 0.5}};
    const SolutionSet s{{line(0, {0.5, 0.5}, {1.5, 0.5}, 10), line(1, {1.5, 0.5}, {0.5, 0.5}, 10)}};
    EXPECT_EQ(validate_solution(p, s, 0.1).clause, 'b');
}

TEST(Validator, InvalidConfigurationIsClauseC) {
    ProblemInstance p = two_discs();
    p.env = Environment({{0, 0}, {4, 4}}, {make_rectangle({0.9, 0.2}, {1.1, 0.8})});
    EXPECT_EQ(validate_solution(p, valid_two_disc_solution(), 0.1).clause, 'c');
}

TEST(Validator, CollisionInsideACompositePathIsClauseC) {
    ProblemInstance p = two_discs();
    p.queries[1] = {{0.5, 0.5}, {0.5, 0.5}};
    p.queries[0] = {{0.5, 0.5}, {0.5, 0.5}};
    TimedPath joint;
    joint.robots = {0, 1};
    joint.steps = {{{0.5, 0.5}, {0.5, 0.5}}};
    EXPECT_EQ(validate_solution(p, {{joint}}, 0.1).clause, 'c');
}

TEST(Validator, OversizedStepIsClauseD) {
    auto s = valid_two_disc_solution();
    s.paths[0] = line(0, {0.5, 0.5}, {1.5, 0.5}, 5);
    EXPECT_EQ(validate_solution(two_discs(), s, 0.1).clause, 'd');
    EXPECT_TRUE(validate_solution(two_discs(), s, 0.2).ok);
}

TEST(Validator, HandoverFaultsAreClauseE) {
    const ProblemInstance p = two_discs();
    // Robot 0 split into two pieces that do not meet.
    TimedPath first = line(0, {0.5, 0.5}, {1.0, 0.5}, 5);
    TimedPath second = line(0, {1.0, 0.5}, {1.5, 0.5}, 5);
    second.t_start = 6;  // gap at t = 5..6
    SolutionSet s{{first, second, line(1, {0.5, 3.5}, {1.5, 3.5}, 10)}};
    EXPECT_EQ(validate_solution(p, s, 0.1).clause, 'e');

    second.t_start = 5;
    s.paths[1] = second;
    EXPECT_TRUE(validate_solution(p, s, 0.1).ok);

    // Handover at the right time but from a different configuration.
    TimedPath jump = line(0, {1.05, 0.5}, {1.5, 0.5}, 5);
    jump.t_start = 5;
    s.paths[1] = jump;
    EXPECT_EQ(validate_solution(p, s, 0.1).clause, 'e');
}

TEST(Validator, MissingRobotIsClauseA) {
    const SolutionSet s{{line(0, {0.5, 0.5}, {1.5, 0.5}, 10)}};
    EXPECT_EQ(validate_solution(two_discs(), s, 0.1).clause, 'a');
}

TEST(Validator, MalformedPathIsClauseE) {
    auto s = valid_two_disc_solution();
    s.paths[0].robots = {7};
    EXPECT_EQ(validate_solution(two_discs(), s, 0.1).clause, 'e');
}
