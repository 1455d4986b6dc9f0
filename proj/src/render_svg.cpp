#include "arc/render_svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "arc/scenario_io.hpp"

namespace arc {

namespace {

// A small qualitative palette; robots cycle through it.
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                   "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};
constexpr std::size_t kArmFrames = 8;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

const char* color(std::size_t robot) { return kColors[robot % std::size(kColors)]; }

class Canvas {
public:
    explicit Canvas(const Aabb& b) : box_(b) {
        const double w = b.width();
        const double h = b.height();
        scale_ = 800.0 / std::max(w, h);
        out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w * scale_ + 20) << "\" height=\""
             << num(h * scale_ + 20) << "\">\n";
    }

    // World y points up, SVG y points down.
    [[nodiscard]] std::string x(double v) const { return num(10 + (v - box_.lo.x) * scale_); }
    [[nodiscard]] std::string y(double v) const { return num(10 + (box_.hi.y - v) * scale_); }
    [[nodiscard]] std::string len(double v) const { return num(v * scale_); }
    [[nodiscard]] std::string point(Vec2 p) const { return x(p.x) + "," + y(p.y); }

    std::ostringstream& out() { return out_; }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    Aabb box_;
    double scale_{1};
    std::ostringstream out_;
};

void draw_obstacle(Canvas& c, const Obstacle& o) {
    if (const auto* circle = std::get_if<Circle>(&o)) {
        c.out() << "<circle class=\"obstacle\" cx=\"" << c.x(circle->center.x) << "\" cy=\"" << c.y(circle->center.y)
                << "\" r=\"" << c.len(circle->radius) << "\" fill=\"#555\"/>\n";
        return;
    }
    c.out() << "<polygon class=\"obstacle\" points=\"";
    for (Vec2 v : std::get<ConvexPolygon>(o).vertices) {
        c.out() << c.point(v) << ' ';
    }
    c.out() << "\" fill=\"#555\"/>\n";
}

void draw_robot(Canvas& c, const RobotModel& robot, const Configuration& q, const char* cls, const char* stroke,
                bool filled, double opacity) {
    const std::string fill = filled ? stroke : "none";
    if (robot.is_disc()) {
        c.out() << "<circle class=\"" << cls << "\" cx=\"" << c.x(q[0]) << "\" cy=\"" << c.y(q[1]) << "\" r=\""
                << c.len(robot.as_disc().radius) << "\" fill=\"" << fill << "\" stroke=\"" << stroke
                << "\" stroke-width=\"2\" opacity=\"" << num(opacity) << "\"/>\n";
        return;
    }
    c.out() << "<polyline class=\"" << cls << "\" points=\"" << c.point(robot.as_arm().base);
    for (const Segment& s : forward_kinematics(robot, q)) {
        c.out() << ' ' << c.point(s.b);
    }
    c.out() << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
            << c.len(2 * robot.as_arm().link_half_width) << "\" stroke-linecap=\"round\""
            << (filled ? "" : " stroke-dasharray=\"4 3\"") << " opacity=\"" << num(opacity) << "\"/>\n";
}

}  // namespace

std::string render_svg(const ProblemInstance& problem, const SolutionSet* solution) {
    const Aabb& b = problem.env.bounds();
    Canvas c(b);
    c.out() << "<rect class=\"bounds\" x=\"" << c.x(b.lo.x) << "\" y=\"" << c.y(b.hi.y) << "\" width=\""
            << c.len(b.width()) << "\" height=\"" << c.len(b.height()) << "\" fill=\"white\" stroke=\"black\"/>\n";
    for (const Obstacle& o : problem.env.obstacles()) {
        draw_obstacle(c, o);
    }

    const std::size_t n = std::min(problem.robots.size(), problem.queries.size());
    if (solution && !solution->paths.empty()) {
        const RobotTimelines timelines(*solution, problem.robots.size());
        for (std::size_t r = 0; r < n; ++r) {
            if (!timelines.covers(r)) {
                continue;
            }
            const int end = timelines.end(r);
            const RobotModel& robot = problem.robots[r];
            if (robot.is_disc()) {
                c.out() << "<polyline class=\"path\" points=\"";
                for (int t = 0; t <= end; ++t) {
                    const Configuration& q = timelines.config(r, t);
                    c.out() << c.point({q[0], q[1]}) << ' ';
                }
                c.out() << "\" fill=\"none\" stroke=\"" << color(r) << "\" stroke-width=\"2\"/>\n";
                continue;
            }
            for (std::size_t f = 1; f < kArmFrames; ++f) {
                const int t = static_cast<int>(static_cast<double>(end) * f / kArmFrames);
                const double opacity = 0.15 + 0.6 * static_cast<double>(f) / kArmFrames;
                draw_robot(c, robot, timelines.config(r, t), "frame", color(r), true, opacity);
            }
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        draw_robot(c, problem.robots[r], problem.queries[r].start, "start", color(r), false, 1.0);
        draw_robot(c, problem.robots[r], problem.queries[r].goal, "goal", color(r), true, 0.6);
    }
    return c.finish();
}

void write_svg(const std::filesystem::path& path, const ProblemInstance& problem, const SolutionSet* solution) {
    write_text(path, render_svg(problem, solution));
}

}  // namespace arc
