// A view of an ordered robot set as one product C-space. Composite states are
// flat vectors holding each member's DOFs back to back in robot-index order.

#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "arc/cspace.hpp"

namespace arc {

using State = std::vector<double>;
using Rng = std::mt19937_64;

class CompositeSpace {
public:
    /// `robots` is the full robot list of the problem; `members` selects and
    /// orders the subset (must be sorted and distinct). Both referenced
    /// objects must outlive the space.
    CompositeSpace(const Environment& env, std::span<const RobotModel> robots, std::vector<std::size_t> members);

    [[nodiscard]] const Environment& env() const noexcept { return *env_; }
    [[nodiscard]] std::span<const RobotModel> all_robots() const noexcept { return robots_; }
    [[nodiscard]] const std::vector<std::size_t>& members() const noexcept { return members_; }
    [[nodiscard]] std::size_t member_count() const noexcept { return members_.size(); }
    [[nodiscard]] const RobotModel& member(std::size_t k) const { return robots_[members_[k]]; }
    [[nodiscard]] std::size_t offset(std::size_t k) const { return offsets_[k]; }
    [[nodiscard]] std::size_t dim() const noexcept { return offsets_.back(); }
    [[nodiscard]] std::span<const double> part(std::span<const double> q, std::size_t k) const {
        return q.subspan(offsets_[k], offsets_[k + 1] - offsets_[k]);
    }
    /// Position of robot index `robot` within the member list; throws if absent.
    [[nodiscard]] std::size_t member_slot(std::size_t robot) const;

    /// Weighted Euclidean distance over all DOFs.
    [[nodiscard]] double distance(std::span<const double> a, std::span<const double> b) const noexcept;
    [[nodiscard]] double squared_distance(std::span<const double> a, std::span<const double> b) const noexcept;
    /// Largest single-robot metric displacement between a and b.
    [[nodiscard]] double max_member_distance(std::span<const double> a, std::span<const double> b) const noexcept;
    /// Intervals such that every member moves at most `step` per interval.
    [[nodiscard]] std::size_t motion_intervals(std::span<const double> a, std::span<const double> b,
                                               double step) const noexcept {
        return interval_count(max_member_distance(a, b), step);
    }

    [[nodiscard]] bool valid(std::span<const double> q) const;
    /// Checks the interior of the straight motion a -> b at both the
    /// collision resolution and the timestep discretization. Endpoints are
    /// assumed valid.
    [[nodiscard]] bool motion_valid(std::span<const double> a, std::span<const double> b, double resolution,
                                    double time_step) const;

    /// Point j of m equal intervals from a to b. Bitwise symmetric:
    /// lerp(a, b, j, m) == lerp(b, a, m - j, m), and j == 0 / j == m return
    /// the endpoints exactly, so a motion checked in one direction yields the
    /// same timestep configurations when traversed in the other.
    void lerp(std::span<const double> a, std::span<const double> b, std::size_t j, std::size_t m, State& out) const;
    [[nodiscard]] CSpaceRegion full_region() const;
    [[nodiscard]] State sample(const CSpaceRegion& region, Rng& rng) const;

    [[nodiscard]] State join(const std::vector<Configuration>& per_member) const;
    [[nodiscard]] std::vector<Configuration> split(std::span<const double> q) const;

private:
    const Environment* env_;
    std::span<const RobotModel> robots_;
    std::vector<std::size_t> members_;
    std::vector<std::size_t> offsets_;
    std::vector<double> weights_;
};

/// Uniform sample with each DOF drawn independently from its interval.
[[nodiscard]] State sample_uniform(const CSpaceRegion& region, Rng& rng);

}  // namespace arc
