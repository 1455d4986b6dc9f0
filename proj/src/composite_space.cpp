#include "arc/composite_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace arc {

CompositeSpace::CompositeSpace(const Environment& env, std::span<const RobotModel> robots,
                               std::vector<std::size_t> members)
    : env_(&env), robots_(robots), members_(std::move(members)) {
    if (members_.empty()) {
        throw std::invalid_argument("composite space needs at least one robot");
    }
    offsets_.push_back(0);
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (members_[k] >= robots_.size()) {
            throw std::invalid_argument("robot index " + std::to_string(members_[k]) + " out of range");
        }
        if (k > 0 && members_[k] <= members_[k - 1]) {
            throw std::invalid_argument("composite members must be sorted and distinct");
        }
        const RobotModel& r = robots_[members_[k]];
        offsets_.push_back(offsets_.back() + r.dof());
        weights_.push_back(r.dof_weight());
    }
}

std::size_t CompositeSpace::member_slot(std::size_t robot) const {
    const auto it = std::lower_bound(members_.begin(), members_.end(), robot);
    if (it == members_.end() || *it != robot) {
        throw std::invalid_argument("robot " + std::to_string(robot) + " is not part of this robot set");
    }
    return static_cast<std::size_t>(it - members_.begin());
}

double CompositeSpace::squared_distance(std::span<const double> a, std::span<const double> b) const noexcept {
    double total = 0.0;
    for (std::size_t k = 0; k < members_.size(); ++k) {
        double s = 0.0;
        for (std::size_t i = offsets_[k]; i < offsets_[k + 1]; ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        total += weights_[k] * weights_[k] * s;
    }
    return total;
}

double CompositeSpace::distance(std::span<const double> a, std::span<const double> b) const noexcept {
    if (members_.size() == 1) {
        // Same arithmetic as cspace_distance so single-robot weights agree bitwise.
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        return weights_[0] * std::sqrt(s);
    }
    return std::sqrt(squared_distance(a, b));
}

double CompositeSpace::max_member_distance(std::span<const double> a, std::span<const double> b) const noexcept {
    double best = 0.0;
    for (std::size_t k = 0; k < members_.size(); ++k) {
        double s = 0.0;
        for (std::size_t i = offsets_[k]; i < offsets_[k + 1]; ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        best = std::max(best, weights_[k] * std::sqrt(s));
    }
    return best;
}

bool CompositeSpace::valid(std::span<const double> q) const {
    std::array<Body, 32> stack_bodies;
    std::vector<Body> heap_bodies;
    Body* bodies = stack_bodies.data();
    if (members_.size() > stack_bodies.size()) {
        heap_bodies.resize(members_.size());
        bodies = heap_bodies.data();
    }
    for (std::size_t k = 0; k < members_.size(); ++k) {
        const RobotModel& r = member(k);
        const auto qk = part(q, k);
        if (!r.is_disc()) {
            const auto& limits = r.as_arm().joint_limits;
            for (std::size_t i = 0; i < qk.size(); ++i) {
                if (!limits[i].contains(qk[i])) {
                    return false;
                }
            }
        }
        bodies[k] = body_of(r, qk);
        if (!body_free(*env_, bodies[k])) {
            return false;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (bodies_collide(bodies[j], bodies[k])) {
                return false;
            }
        }
    }
    return true;
}

bool CompositeSpace::motion_valid(std::span<const double> a, std::span<const double> b, double resolution,
                                  double time_step) const {
    const double length = max_member_distance(a, b);
    State q(a.size());
    for (const double step : {time_step, resolution}) {
        const std::size_t n = interval_count(length, step);
        for (std::size_t i = 1; i < n; ++i) {
            lerp(a, b, i, n, q);
            if (!valid(q)) {
                return false;
            }
        }
    }
    return true;
}

void CompositeSpace::lerp(std::span<const double> a, std::span<const double> b, std::size_t j, std::size_t m,
                          State& out) const {
    out.resize(a.size());
    if (j == 0 || j == m) {
        const auto src = j == 0 ? a : b;
        std::copy(src.begin(), src.end(), out.begin());
        return;
    }
    // Always measure from the lexicographically smaller endpoint.
    const bool forward = !std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    const auto lo = forward ? a : b;
    const auto hi = forward ? b : a;
    const double s = static_cast<double>(forward ? j : m - j) / static_cast<double>(m);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = lo[i] + s * (hi[i] - lo[i]);
    }
}

CSpaceRegion CompositeSpace::full_region() const {
    CSpaceRegion region;
    for (std::size_t k = 0; k < members_.size(); ++k) {
        const RobotModel& r = member(k);
        for (std::size_t i = 0; i < r.dof(); ++i) {
            region.intervals.push_back(r.dof_range(i, *env_));
        }
    }
    return region;
}

State sample_uniform(const CSpaceRegion& region, Rng& rng) {
    State q(region.dim());
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        const Interval& iv = region.intervals[i];
        q[i] = iv.width() > 0.0 ? iv.lo + unit(rng) * iv.width() : iv.lo;
        q[i] = std::min(q[i], iv.hi);
    }
    return q;
}

State CompositeSpace::sample(const CSpaceRegion& region, Rng& rng) const {
    if (region.dim() != dim()) {
        throw std::invalid_argument("sampling region dimension does not match the robot set");
    }
    return sample_uniform(region, rng);
}

State CompositeSpace::join(const std::vector<Configuration>& per_member) const {
    if (per_member.size() != members_.size()) {
        throw std::invalid_argument("expected one configuration per robot in the set");
    }
    State q;
    q.reserve(dim());
    for (std::size_t k = 0; k < members_.size(); ++k) {
        check_dimension(member(k), per_member[k].span());
        q.insert(q.end(), per_member[k].values.begin(), per_member[k].values.end());
    }
    return q;
}

std::vector<Configuration> CompositeSpace::split(std::span<const double> q) const {
    std::vector<Configuration> out;
    out.reserve(members_.size());
    for (std::size_t k = 0; k < members_.size(); ++k) {
        const auto p = part(q, k);
        out.emplace_back(std::vector<double>(p.begin(), p.end()));
    }
    return out;
}

}  // namespace arc
