// Planar geometry primitives used by collision checking.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace arc {

struct Vec2 {
    double x{0};
    double y{0};

    friend Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) noexcept { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

[[nodiscard]] inline double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
[[nodiscard]] inline double cross(Vec2 a, Vec2 b) noexcept { return a.x * b.y - a.y * b.x; }
[[nodiscard]] inline double norm(Vec2 a) noexcept { return std::hypot(a.x, a.y); }

/// Axis-aligned box; also used as a cheap prefilter.
struct Aabb {
    Vec2 lo;
    Vec2 hi;

    [[nodiscard]] bool overlaps(const Aabb& o, double margin = 0.0) const noexcept {
        return lo.x - margin <= o.hi.x && o.lo.x - margin <= hi.x &&
               lo.y - margin <= o.hi.y && o.lo.y - margin <= hi.y;
    }
    [[nodiscard]] double width() const noexcept { return hi.x - lo.x; }
    [[nodiscard]] double height() const noexcept { return hi.y - lo.y; }
    friend bool operator==(const Aabb&, const Aabb&) = default;
};

[[nodiscard]] inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) noexcept {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) {
        return norm(p - a);
    }
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

[[nodiscard]] inline int orientation_sign(Vec2 a, Vec2 b, Vec2 c) noexcept {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

/// Proper or touching intersection of two closed segments.
[[nodiscard]] inline bool segments_intersect(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) noexcept {
    const int o1 = orientation_sign(a0, a1, b0);
    const int o2 = orientation_sign(a0, a1, b1);
    const int o3 = orientation_sign(b0, b1, a0);
    const int o4 = orientation_sign(b0, b1, a1);
    if (o1 != o2 && o3 != o4) {
        return true;
    }
    auto on_segment = [](Vec2 p, Vec2 q, Vec2 r) {
        return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
               std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
    };
    return (o1 == 0 && on_segment(a0, a1, b0)) || (o2 == 0 && on_segment(a0, a1, b1)) ||
           (o3 == 0 && on_segment(b0, b1, a0)) || (o4 == 0 && on_segment(b0, b1, a1));
}

[[nodiscard]] inline double segment_segment_distance(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) noexcept {
    if (a0 == a1 && b0 == b1) {
        return norm(a0 - b0);
    }
    if (segments_intersect(a0, a1, b0, b1)) {
        return 0.0;
    }
    return std::min({point_segment_distance(a0, b0, b1), point_segment_distance(a1, b0, b1),
                     point_segment_distance(b0, a0, a1), point_segment_distance(b1, a0, a1)});
}

struct Circle {
    Vec2 center;
    double radius{0};

    [[nodiscard]] Aabb bounds() const noexcept {
        return {{center.x - radius, center.y - radius}, {center.x + radius, center.y + radius}};
    }
    friend bool operator==(const Circle&, const Circle&) = default;
};

/// Convex polygon with counter-clockwise vertices. Construct through
/// make_convex_polygon() to get validation.
struct ConvexPolygon {
    std::vector<Vec2> vertices;
    Aabb box;

    [[nodiscard]] Aabb bounds() const noexcept { return box; }
    [[nodiscard]] bool contains(Vec2 p) const noexcept {
        const std::size_t n = vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (cross(vertices[(i + 1) % n] - vertices[i], p - vertices[i]) < 0.0) {
                return false;
            }
        }
        return true;
    }
    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
        return a.vertices == b.vertices;
    }
};

/// Throws std::invalid_argument for fewer than three vertices, clockwise or
/// non-convex input, or repeated/collinear vertices.
[[nodiscard]] ConvexPolygon make_convex_polygon(std::vector<Vec2> vertices);

[[nodiscard]] ConvexPolygon make_rectangle(Vec2 lo, Vec2 hi);

/// Zero when the segment touches or enters the polygon.
[[nodiscard]] inline double segment_polygon_distance(Vec2 a, Vec2 b, const ConvexPolygon& poly) noexcept {
    if (poly.contains(a) || poly.contains(b)) {
        return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, segment_segment_distance(a, b, poly.vertices[i], poly.vertices[(i + 1) % n]));
        if (best == 0.0) {
            break;
        }
    }
    return best;
}

/// A segment inflated by a radius. A disc is a capsule with a == b.
struct Capsule {
    Vec2 a;
    Vec2 b;
    double radius{0};

    [[nodiscard]] Aabb bounds() const noexcept {
        return {{std::min(a.x, b.x) - radius, std::min(a.y, b.y) - radius},
                {std::max(a.x, b.x) + radius, std::max(a.y, b.y) + radius}};
    }
};

[[nodiscard]] inline bool capsules_overlap(const Capsule& p, const Capsule& q) noexcept {
    return segment_segment_distance(p.a, p.b, q.a, q.b) < p.radius + q.radius;
}

}  // namespace arc
