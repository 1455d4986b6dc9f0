// Probabilistic roadmaps over individual or composite C-space regions.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arc/composite_space.hpp"
#include "arc/paths.hpp"

namespace arc {

struct RoadmapParams {
    std::size_t k_neighbors{5};
    /// Collision-checking step along edges (metric units).
    double resolution{0.05};
    /// Largest per-robot displacement per timestep.
    double max_step{0.1};

    friend bool operator==(const RoadmapParams&, const RoadmapParams&) = default;
};

struct RoadmapEdge {
    std::size_t to;
    double weight;
};

/// Counters for one grow_roadmap call. A sample counts as progress when it
/// is valid and either starts a new connected component or merges two or
/// more existing ones.
struct GrowthStats {
    std::size_t samples{0};
    std::size_t valid{0};
    std::size_t edges{0};
    std::size_t merges{0};
    std::size_t progress{0};
};

class Roadmap {
public:
    Roadmap(CompositeSpace space, CSpaceRegion region);

    [[nodiscard]] const CompositeSpace& space() const noexcept { return space_; }
    [[nodiscard]] const CSpaceRegion& region() const noexcept { return region_; }
    [[nodiscard]] std::size_t size() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
    [[nodiscard]] std::span<const double> vertex(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }
    [[nodiscard]] const std::vector<RoadmapEdge>& neighbors(std::size_t i) const { return adjacency_[i]; }

    /// The k nearest vertices to q, ascending by (distance, index). When a
    /// mask is given only vertices with mask[i] != 0 are candidates.
    [[nodiscard]] std::vector<std::size_t> nearest(std::span<const double> q, std::size_t k,
                                                   const std::vector<char>* mask = nullptr) const;
    [[nodiscard]] std::optional<std::size_t> find_vertex(std::span<const double> q,
                                                         const std::vector<char>* mask = nullptr) const;

    /// Appends q without validation; returns its index.
    std::size_t add_vertex(std::span<const double> q);
    void add_edge(std::size_t a, std::size_t b, double weight);

    [[nodiscard]] std::size_t component(std::size_t i) const noexcept;
    [[nodiscard]] bool connected(std::size_t a, std::size_t b) const noexcept {
        return component(a) == component(b);
    }

    /// Adds q (assumed valid) and links it to its k nearest vertices with
    /// validated straight edges. Returns the new vertex index.
    std::size_t insert(std::span<const double> q, const RoadmapParams& params, GrowthStats* stats = nullptr);

private:
    void unite(std::size_t a, std::size_t b) noexcept;

    CompositeSpace space_;
    CSpaceRegion region_;
    std::size_t dim_;
    std::vector<double> coords_;
    std::vector<std::vector<RoadmapEdge>> adjacency_;
    std::size_t edge_count_{0};
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_size_;
};

struct GeometricPath {
    std::vector<State> waypoints;
};

/// Draws n_samples uniform samples from `region`; invalid samples are
/// dropped, not retried.
GrowthStats grow_roadmap(Roadmap& roadmap, const CSpaceRegion& region, std::size_t n_samples,
                         const RoadmapParams& params, Rng& rng);

/// Query endpoints joined to a roadmap without modifying it. Endpoints equal
/// to an existing (unmasked) vertex reuse it; otherwise they are temporary
/// vertices n (start) and n + 1 (goal) whose edges live in `extra`, which is
/// indexed over all n + 2 ids.
struct QueryLinks {
    std::size_t start{0};
    std::size_t goal{0};
    std::vector<std::vector<RoadmapEdge>> extra;
};

[[nodiscard]] QueryLinks link_query(const Roadmap& roadmap, std::span<const double> start,
                                    std::span<const double> goal, const RoadmapParams& params,
                                    const std::vector<char>* mask = nullptr);

/// Minimum-weight path from start to goal. Both are linked into the roadmap
/// by the k-nearest validated-edge rule for the duration of the query only.
/// Among equal-weight paths the lexicographically smallest vertex sequence
/// wins. Throws std::invalid_argument when start or goal is invalid.
[[nodiscard]] std::optional<GeometricPath> query_path(const Roadmap& roadmap, std::span<const double> start,
                                                      std::span<const double> goal, const RoadmapParams& params,
                                                      const std::vector<char>* mask = nullptr);

/// Sum of metric lengths of consecutive waypoints.
[[nodiscard]] double path_length(const CompositeSpace& space, const GeometricPath& path);

/// Resamples each waypoint-to-waypoint leg so no robot moves more than
/// max_step per timestep. Waypoints are kept as timesteps; t_start is 0.
[[nodiscard]] TimedPath time_parameterize(const CompositeSpace& space, const GeometricPath& path,
                                          double max_step);

}  // namespace arc
