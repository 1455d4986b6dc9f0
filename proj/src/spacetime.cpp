#include "arc/spacetime.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace arc {

MovingObstacle make_obstacle(const RobotModel& robot, const std::vector<Configuration>& trajectory) {
    if (trajectory.empty()) {
        throw std::invalid_argument("obstacle trajectory is empty");
    }
    MovingObstacle out;
    out.bodies.reserve(trajectory.size());
    for (const Configuration& q : trajectory) {
        out.bodies.push_back(body_of(robot, q.span()));
    }
    return out;
}

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max();

struct Node {
    std::size_t v;
    int t;
    std::int64_t parent;
};

struct OpenItem {
    int f;
    int t;
    std::size_t node;

    // Lowest f first; among equal f prefer later t (deeper), then insertion order.
    bool operator>(const OpenItem& o) const {
        if (f != o.f) {
            return f > o.f;
        }
        if (t != o.t) {
            return t < o.t;
        }
        return node > o.node;
    }
};

}  // namespace

SpaceTimeResult plan_space_time(const Roadmap& roadmap, const std::vector<char>* mask, std::span<const double> start,
                                std::span<const double> goal, const std::vector<MovingObstacle>& obstacles, int horizon,
                                const RoadmapParams& params, const Deadline& deadline) {
    const CompositeSpace& space = roadmap.space();
    if (space.member_count() != 1) {
        throw std::invalid_argument("space-time search needs a single-robot roadmap");
    }
    if (start.size() != space.dim() || goal.size() != space.dim()) {
        throw std::invalid_argument("query dimension mismatch");
    }
    const RobotModel& robot = space.member(0);
    SpaceTimeResult result;

    const std::size_t n = roadmap.size();
    const bool same = std::equal(start.begin(), start.end(), goal.begin(), goal.end());
    const QueryLinks links = link_query(roadmap, start, goal, params, mask);
    const std::size_t s = links.start;
    const std::size_t g = same ? s : links.goal;
    const std::size_t total = n + 2;

    auto point = [&](std::size_t i) -> std::span<const double> {
        if (i < n) {
            return roadmap.vertex(i);
        }
        return i == n ? start : goal;
    };
    auto for_each_edge = [&](std::size_t u, auto&& fn) {
        if (u < n) {
            for (const RoadmapEdge& e : roadmap.neighbors(u)) {
                if (!mask || (*mask)[e.to]) {
                    fn(e);
                }
            }
        }
        for (const RoadmapEdge& e : links.extra[u]) {
            fn(e);
        }
    };
    auto edge_steps = [&](const RoadmapEdge& e) {
        return static_cast<int>(interval_count(e.weight, params.max_step));
    };

    // Obstacle-free step counts to the goal: the A* heuristic.
    std::vector<int> h(total, kUnreachable);
    {
        using Item = std::pair<int, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
        h[g] = 0;
        open.push({0, g});
        while (!open.empty()) {
            const auto [d, u] = open.top();
            open.pop();
            if (d > h[u]) {
                continue;
            }
            for_each_edge(u, [&](const RoadmapEdge& e) {
                const int nd = d + edge_steps(e);
                if (nd < h[e.to]) {
                    h[e.to] = nd;
                    open.push({nd, e.to});
                }
            });
        }
    }
    if (h[s] == kUnreachable) {
        return result;
    }

    int t_static = 0;
    for (const MovingObstacle& o : obstacles) {
        t_static = std::max(t_static, static_cast<int>(o.bodies.size()) - 1);
    }
    if (horizon < 0) {
        horizon = t_static + 4 * h[s] + 4;
    }

    auto blocked_at = [&](const Body& b, int t) {
        for (const MovingObstacle& o : obstacles) {
            if (bodies_collide(b, o.at(t))) {
                return true;
            }
        }
        return false;
    };
    // Moving from `prev` (t - 1) to `next` (t): blocked if `next` hits an
    // obstacle at t, or the two trade places across the timestep.
    auto step_blocked = [&](const Body& prev, const Body& next, int t) {
        for (const MovingObstacle& o : obstacles) {
            if (bodies_collide(next, o.at(t))) {
                return true;
            }
            if (bodies_collide(next, o.at(t - 1)) && bodies_collide(prev, o.at(t))) {
                return true;
            }
        }
        return false;
    };

    const Body start_body = body_of(robot, start);
    if (blocked_at(start_body, 0)) {
        return result;
    }
    const Body goal_body = body_of(robot, goal);
    int goal_free_from = 0;
    for (int t = 0; t <= t_static; ++t) {
        if (blocked_at(goal_body, t)) {
            goal_free_from = t + 1;
        }
    }
    if (goal_free_from > t_static && !obstacles.empty() && blocked_at(goal_body, t_static)) {
        return result;  // the goal stays occupied forever
    }

    const auto key = [&](std::size_t v, int t) {
        return static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(t_static + 1) +
               static_cast<std::uint64_t>(std::min(t, t_static));
    };
    std::vector<Node> nodes;
    std::unordered_set<std::uint64_t> closed;
    std::priority_queue<OpenItem, std::vector<OpenItem>, std::greater<>> open;
    nodes.push_back({s, 0, -1});
    open.push({h[s], 0, 0});

    State q;
    std::vector<Body> sub_bodies;
    std::int64_t found = -1;
    while (!open.empty()) {
        const OpenItem item = open.top();
        open.pop();
        const Node cur = nodes[item.node];
        if (!closed.insert(key(cur.v, cur.t)).second) {
            continue;
        }
        if (cur.v == g && cur.t >= goal_free_from) {
            found = static_cast<std::int64_t>(item.node);
            break;
        }
        if (++result.expansions % 4096 == 0) {
            deadline.check();
        }
        const auto pv = point(cur.v);
        const Body here = body_of(robot, pv);
        if (cur.t < t_static && cur.t + 1 + h[cur.v] <= horizon && !closed.count(key(cur.v, cur.t + 1)) &&
            !step_blocked(here, here, cur.t + 1)) {
            nodes.push_back({cur.v, cur.t + 1, static_cast<std::int64_t>(item.node)});
            open.push({cur.t + 1 + h[cur.v], cur.t + 1, nodes.size() - 1});
        }
        for_each_edge(cur.v, [&](const RoadmapEdge& e) {
            if (h[e.to] == kUnreachable) {
                return;
            }
            const int m = edge_steps(e);
            const int arrive = cur.t + m;
            if (arrive + h[e.to] > horizon || closed.count(key(e.to, arrive))) {
                return;
            }
            if (!obstacles.empty()) {
                const auto pe = point(e.to);
                Body prev = here;
                for (int j = 1; j <= m; ++j) {
                    space.lerp(pv, pe, static_cast<std::size_t>(j), static_cast<std::size_t>(m), q);
                    const Body next = body_of(robot, q);
                    if (step_blocked(prev, next, cur.t + j)) {
                        return;
                    }
                    prev = next;
                }
            }
            nodes.push_back({e.to, arrive, static_cast<std::int64_t>(item.node)});
            open.push({arrive + h[e.to], arrive, nodes.size() - 1});
        });
    }
    if (found < 0) {
        return result;
    }

    std::vector<std::size_t> chain;
    for (std::int64_t i = found; i >= 0; i = nodes[static_cast<std::size_t>(i)].parent) {
        chain.push_back(static_cast<std::size_t>(i));
    }
    std::reverse(chain.begin(), chain.end());
    std::vector<Configuration> out;
    out.emplace_back(std::vector<double>(start.begin(), start.end()));
    for (std::size_t c = 1; c < chain.size(); ++c) {
        const Node& a = nodes[chain[c - 1]];
        const Node& b = nodes[chain[c]];
        const std::size_t m = static_cast<std::size_t>(b.t - a.t);
        for (std::size_t j = 1; j <= m; ++j) {
            if (a.v == b.v) {
                out.push_back(out.back());
            } else {
                space.lerp(point(a.v), point(b.v), j, m, q);
                out.emplace_back(q);
            }
        }
    }
    result.path = std::move(out);
    return result;
}

}  // namespace arc
