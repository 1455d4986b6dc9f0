#include "arc/roadmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace arc {

Roadmap::Roadmap(CompositeSpace space, CSpaceRegion region)
    : space_(std::move(space)), region_(std::move(region)), dim_(space_.dim()) {
    if (region_.dim() != dim_) {
        throw std::invalid_argument("roadmap region dimension does not match its robot set");
    }
}

std::vector<std::size_t> Roadmap::nearest(std::span<const double> q, std::size_t k,
                                          const std::vector<char>* mask) const {
    std::vector<std::pair<double, std::size_t>> cand;
    cand.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (mask && !(*mask)[i]) {
            continue;
        }
        cand.emplace_back(space_.squared_distance(q, vertex(i)), i);
    }
    const std::size_t keep = std::min(k, cand.size());
    std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(keep), cand.end());
    std::vector<std::size_t> out(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        out[i] = cand[i].second;
    }
    return out;
}

std::optional<std::size_t> Roadmap::find_vertex(std::span<const double> q, const std::vector<char>* mask) const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (mask && !(*mask)[i]) {
            continue;
        }
        const auto v = vertex(i);
        if (std::equal(v.begin(), v.end(), q.begin(), q.end())) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Roadmap::add_vertex(std::span<const double> q) {
    if (q.size() != dim_) {
        throw std::invalid_argument("vertex dimension mismatch");
    }
    coords_.insert(coords_.end(), q.begin(), q.end());
    adjacency_.emplace_back();
    parent_.push_back(parent_.size());
    rank_size_.push_back(1);
    return adjacency_.size() - 1;
}

void Roadmap::add_edge(std::size_t a, std::size_t b, double weight) {
    adjacency_[a].push_back({b, weight});
    adjacency_[b].push_back({a, weight});
    ++edge_count_;
    unite(a, b);
}

std::size_t Roadmap::component(std::size_t i) const noexcept {
    while (parent_[i] != i) {
        i = parent_[i];
    }
    return i;
}

void Roadmap::unite(std::size_t a, std::size_t b) noexcept {
    a = component(a);
    b = component(b);
    if (a == b) {
        return;
    }
    if (rank_size_[a] < rank_size_[b]) {
        std::swap(a, b);
    }
    parent_[b] = a;
    rank_size_[a] += rank_size_[b];
}

std::size_t Roadmap::insert(std::span<const double> q, const RoadmapParams& params, GrowthStats* stats) {
    const std::vector<std::size_t> near = nearest(q, params.k_neighbors);
    const std::size_t v = add_vertex(q);
    std::vector<std::size_t> touched;
    std::size_t edges = 0;
    for (std::size_t u : near) {
        const double w = space_.distance(vertex(u), vertex(v));
        if (w == 0.0) {
            continue;
        }
        if (!space_.motion_valid(vertex(u), vertex(v), params.resolution, params.max_step)) {
            continue;
        }
        const std::size_t cu = component(u);
        if (std::find(touched.begin(), touched.end(), cu) == touched.end()) {
            touched.push_back(cu);
        }
        add_edge(u, v, w);
        ++edges;
    }
    if (stats) {
        stats->edges += edges;
        if (touched.size() >= 2) {
            ++stats->merges;
        }
        if (touched.empty() || touched.size() >= 2) {
            ++stats->progress;
        }
    }
    return v;
}

GrowthStats grow_roadmap(Roadmap& roadmap, const CSpaceRegion& region, std::size_t n_samples,
                         const RoadmapParams& params, Rng& rng) {
    if (params.k_neighbors < 1) {
        throw std::invalid_argument("k_neighbors must be at least 1");
    }
    GrowthStats stats;
    const CompositeSpace& space = roadmap.space();
    for (std::size_t i = 0; i < n_samples; ++i) {
        ++stats.samples;
        const State q = space.sample(region, rng);
        if (!space.valid(q)) {
            continue;
        }
        ++stats.valid;
        roadmap.insert(q, params, &stats);
    }
    return stats;
}

QueryLinks link_query(const Roadmap& roadmap, std::span<const double> start, std::span<const double> goal,
                      const RoadmapParams& params, const std::vector<char>* mask) {
    const CompositeSpace& space = roadmap.space();
    const std::size_t n = roadmap.size();
    QueryLinks links;
    const auto start_existing = roadmap.find_vertex(start, mask);
    const auto goal_existing = roadmap.find_vertex(goal, mask);
    links.start = start_existing.value_or(n);
    links.goal = goal_existing.value_or(n + 1);
    links.extra.resize(n + 2);
    auto link = [&](std::size_t temp, std::span<const double> q) {
        for (std::size_t u : roadmap.nearest(q, params.k_neighbors, mask)) {
            const double w = space.distance(roadmap.vertex(u), q);
            if (w > 0.0 && space.motion_valid(roadmap.vertex(u), q, params.resolution, params.max_step)) {
                links.extra[temp].push_back({u, w});
                links.extra[u].push_back({temp, w});
            }
        }
    };
    if (!start_existing) {
        link(n, start);
    }
    if (!goal_existing) {
        link(n + 1, goal);
        // The goal may also link straight to the temporary start when it is
        // among its k nearest candidates.
        if (!start_existing) {
            const double w = space.distance(start, goal);
            const auto near = roadmap.nearest(goal, params.k_neighbors, mask);
            const bool closer = near.size() < params.k_neighbors ||
                                space.squared_distance(goal, roadmap.vertex(near.back())) > w * w;
            if (w > 0.0 && closer && space.motion_valid(start, goal, params.resolution, params.max_step)) {
                links.extra[n].push_back({n + 1, w});
                links.extra[n + 1].push_back({n, w});
            }
        }
    }
    return links;
}

std::optional<GeometricPath> query_path(const Roadmap& roadmap, std::span<const double> start,
                                        std::span<const double> goal, const RoadmapParams& params,
                                        const std::vector<char>* mask) {
    const CompositeSpace& space = roadmap.space();
    if (start.size() != space.dim() || goal.size() != space.dim()) {
        throw std::invalid_argument("query dimension mismatch");
    }
    if (!space.valid(start)) {
        throw std::invalid_argument("query start configuration is invalid");
    }
    if (!space.valid(goal)) {
        throw std::invalid_argument("query goal configuration is invalid");
    }
    if (std::equal(start.begin(), start.end(), goal.begin(), goal.end())) {
        return GeometricPath{{State(start.begin(), start.end())}};
    }

    const std::size_t n = roadmap.size();
    const QueryLinks links = link_query(roadmap, start, goal, params, mask);
    const std::size_t s = links.start;
    const std::size_t g = links.goal;
    const auto& extra = links.extra;

    const std::size_t total = n + 2;
    auto for_each_edge = [&](std::size_t u, auto&& fn) {
        if (u < n) {
            for (const RoadmapEdge& e : roadmap.neighbors(u)) {
                if (!mask || (*mask)[e.to]) {
                    fn(e);
                }
            }
        }
        for (const RoadmapEdge& e : extra[u]) {
            fn(e);
        }
    };
    auto point = [&](std::size_t i) -> std::span<const double> {
        if (i < n) {
            return roadmap.vertex(i);
        }
        return i == n ? start : goal;
    };

    // Distances to the goal, then a greedy walk that always takes the
    // smallest-index successor lying on some shortest path.
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(total, inf);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
    dist[g] = 0.0;
    open.push({0.0, g});
    while (!open.empty()) {
        const auto [d, u] = open.top();
        open.pop();
        if (d > dist[u]) {
            continue;
        }
        if (u == s) {
            break;
        }
        for_each_edge(u, [&](const RoadmapEdge& e) {
            const double nd = d + e.weight;
            if (nd < dist[e.to]) {
                dist[e.to] = nd;
                open.push({nd, e.to});
            }
        });
    }
    if (dist[s] == inf) {
        return std::nullopt;
    }

    GeometricPath path;
    std::size_t u = s;
    path.waypoints.emplace_back(point(u).begin(), point(u).end());
    while (u != g) {
        std::size_t next = total;
        for_each_edge(u, [&](const RoadmapEdge& e) {
            if (dist[e.to] >= dist[u]) {
                return;
            }
            const double slack = std::abs(dist[u] - (e.weight + dist[e.to]));
            if (slack <= 1e-12 * std::max(1.0, dist[u]) && e.to < next) {
                next = e.to;
            }
        });
        if (next == total) {
            throw std::logic_error("query_path: shortest-path walk lost its way");
        }
        u = next;
        path.waypoints.emplace_back(point(u).begin(), point(u).end());
    }
    return path;
}

double path_length(const CompositeSpace& space, const GeometricPath& path) {
    double total = 0.0;
    for (std::size_t i = 1; i < path.waypoints.size(); ++i) {
        total += space.distance(path.waypoints[i - 1], path.waypoints[i]);
    }
    return total;
}

TimedPath time_parameterize(const CompositeSpace& space, const GeometricPath& path, double max_step) {
    if (!(max_step > 0.0)) {
        throw std::invalid_argument("time_parameterize: max_step must be positive");
    }
    if (path.waypoints.empty()) {
        throw std::invalid_argument("time_parameterize: empty path");
    }
    TimedPath out;
    out.robots = space.members();
    out.t_start = 0;
    out.steps.push_back(space.split(path.waypoints.front()));
    State q;
    for (std::size_t i = 1; i < path.waypoints.size(); ++i) {
        const State& a = path.waypoints[i - 1];
        const State& b = path.waypoints[i];
        const std::size_t m = space.motion_intervals(a, b, max_step);
        for (std::size_t j = 1; j < m; ++j) {
            space.lerp(a, b, j, m, q);
            out.steps.push_back(space.split(q));
        }
        if (m > 0) {
            out.steps.push_back(space.split(b));
        }
    }
    return out;
}

}  // namespace arc
