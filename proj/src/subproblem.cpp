#include "arc/subproblem.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "arc/composite_space.hpp"

namespace arc {

std::vector<std::size_t> merge_robot_sets(const Conflict& conflict, const SolutionSet& paths) {
    const TimedPath& pa = paths.paths.at(conflict.path_i);
    const TimedPath& pb = paths.paths.at(conflict.path_j);
    std::vector<std::size_t> out;
    std::set_union(pa.robots.begin(), pa.robots.end(), pb.robots.begin(), pb.robots.end(), std::back_inserter(out));
    const bool concurrent = std::max(pa.t_start, pb.t_start) < std::min(pa.t_end(), pb.t_end());
    if (concurrent && out.size() != pa.robots.size() + pb.robots.size()) {
        throw std::logic_error("conflicting paths hold a robot at the same time; the solution set is malformed");
    }
    return out;
}

namespace {

bool mutually_colliding(const ProblemInstance& problem, const std::vector<std::size_t>& robots,
                        const std::vector<Configuration>& configs) {
    for (std::size_t a = 0; a < robots.size(); ++a) {
        for (std::size_t b = a + 1; b < robots.size(); ++b) {
            if (robots_in_collision(problem.robots[robots[a]], configs[a], problem.robots[robots[b]], configs[b])) {
                return true;
            }
        }
    }
    return false;
}

CSpaceRegion padded_box(const Subproblem& sub, const ProblemInstance& problem, double max_step) {
    CSpaceRegion region;
    for (std::size_t k = 0; k < sub.robots.size(); ++k) {
        const RobotModel& robot = problem.robots[sub.robots[k]];
        double pad = sub.window * max_step;
        if (robot.is_disc()) {
            pad = std::max(pad, robot.as_disc().radius);
        } else {
            pad /= robot.as_arm().reach();
        }
        for (std::size_t i = 0; i < robot.dof(); ++i) {
            const double lo = std::min(sub.starts[k][i], sub.goals[k][i]);
            const double hi = std::max(sub.starts[k][i], sub.goals[k][i]);
            const Interval range = robot.dof_range(i, problem.env);
            region.intervals.push_back({std::max(range.lo, lo - pad), std::min(range.hi, hi + pad)});
        }
    }
    return region;
}

// Recomputes Q' and E' for the current window, moving the window edges out
// by `advance` while local starts or goals are in mutual collision.
void refresh(Subproblem& sub, const SolutionSet& paths, const ProblemInstance& problem, int advance,
             double max_step, const CSpaceRegion* previous) {
    const RobotTimelines timelines(paths, problem.robots.size());
    const std::size_t m = sub.robots.size();
    while (true) {
        sub.global = sub.t_from == 0 && std::all_of(sub.robots.begin(), sub.robots.end(), [&](std::size_t r) {
                         return sub.t_to >= timelines.end(r);
                     });
        sub.starts.resize(m);
        sub.goals.resize(m);
        for (std::size_t k = 0; k < m; ++k) {
            const std::size_t r = sub.robots[k];
            sub.starts[k] = sub.global ? problem.queries[r].start : timelines.config(r, sub.t_from);
            sub.goals[k] = sub.global ? problem.queries[r].goal : timelines.config(r, sub.t_to);
        }
        if (sub.global) {
            break;
        }
        bool moved = false;
        if (mutually_colliding(problem, sub.robots, sub.starts) && sub.t_from > 0) {
            sub.t_from = std::max(0, sub.t_from - advance);
            moved = true;
        }
        if (mutually_colliding(problem, sub.robots, sub.goals)) {
            sub.t_to += advance;
            moved = true;
        }
        if (!moved) {
            break;
        }
    }

    if (sub.global) {
        sub.region = CompositeSpace(problem.env, problem.robots, sub.robots).full_region();
        return;
    }
    sub.region = padded_box(sub, problem, max_step);
    if (previous) {
        for (std::size_t i = 0; i < sub.region.dim(); ++i) {
            sub.region.intervals[i].lo = std::min(sub.region.intervals[i].lo, previous->intervals[i].lo);
            sub.region.intervals[i].hi = std::max(sub.region.intervals[i].hi, previous->intervals[i].hi);
        }
    }
}

}  // namespace

Subproblem create_subproblem(const Conflict& conflict, const SolutionSet& paths, const ProblemInstance& problem,
                             int w0, double max_step) {
    if (w0 < 1) {
        throw std::invalid_argument("window must be >= 1");
    }
    Subproblem sub;
    sub.robots = merge_robot_sets(conflict, paths);
    sub.source_paths = {conflict.path_i, conflict.path_j};
    sub.window = w0;
    sub.anchor = conflict.t;
    sub.t_from = std::max(0, conflict.t - w0);
    sub.t_to = conflict.t + w0;
    refresh(sub, paths, problem, w0, max_step, nullptr);
    return sub;
}

Subproblem adapt_subproblem(const Subproblem& sub, const SolutionSet& paths, const ProblemInstance& problem,
                            int growth, double max_step) {
    if (growth < 1) {
        throw std::invalid_argument("growth must be >= 1");
    }
    Subproblem next = sub;
    next.window += growth;
    next.expansions += 1;
    next.t_from = std::max(0, std::min(sub.t_from, sub.anchor - next.window));
    next.t_to = std::max(sub.t_to, sub.anchor + next.window);
    refresh(next, paths, problem, growth, max_step, &sub.region);
    return next;
}

namespace {

enum class Piece { untouched, prefix, suffix };

// Path fragments grouped by where they came from: (source path, kind,
// padded-to-window flag) -> robots carried over.
using PieceKey = std::tuple<std::size_t, Piece, bool>;

TimedPath cut(const TimedPath& p, const std::vector<std::size_t>& robots, int from, int to, int shift, int pad_to) {
    TimedPath out;
    out.robots = robots;
    out.t_start = from + shift;
    std::vector<std::size_t> slots;
    for (std::size_t r : robots) {
        slots.push_back(p.slot(r));
    }
    for (int t = from; t <= to; ++t) {
        const auto& step = p.steps[static_cast<std::size_t>(t - p.t_start)];
        std::vector<Configuration> row;
        row.reserve(slots.size());
        for (std::size_t s : slots) {
            row.push_back(step[s]);
        }
        out.steps.push_back(std::move(row));
    }
    while (out.t_end() < pad_to) {
        out.steps.push_back(out.steps.back());
    }
    return out;
}

}  // namespace

SolutionSet stitch_solution(const SolutionSet& paths, const Subproblem& sub, const TimedPath& local) {
    if (local.robots != sub.robots || local.steps.empty()) {
        throw std::logic_error("local path does not cover the subproblem's robot set");
    }
    if (local.steps.front() != sub.starts || local.steps.back() != sub.goals) {
        throw std::logic_error("local path endpoints do not match the subproblem query");
    }
    std::size_t robot_count = 0;
    for (const TimedPath& p : paths.paths) {
        for (std::size_t r : p.robots) {
            robot_count = std::max(robot_count, r + 1);
        }
    }
    const RobotTimelines timelines(paths, robot_count);
    const int ts = sub.t_from;
    const int te = sub.t_to;
    const int shift = ts + local.duration() - te;
    auto involved = [&](std::size_t r) { return std::binary_search(sub.robots.begin(), sub.robots.end(), r); };

    std::map<PieceKey, std::vector<std::size_t>> groups;
    for (std::size_t pi = 0; pi < paths.paths.size(); ++pi) {
        const TimedPath& p = paths.paths[pi];
        for (std::size_t r : p.robots) {
            if (!involved(r)) {
                groups[{pi, Piece::untouched, false}].push_back(r);
                continue;
            }
            const bool last = timelines.paths_of(r).back() == pi;
            if (p.t_start < ts) {
                groups[{pi, Piece::prefix, last && p.t_end() < ts}].push_back(r);
            }
            if (p.t_end() > te) {
                groups[{pi, Piece::suffix, false}].push_back(r);
            }
        }
    }

    SolutionSet out;
    for (const auto& [key, robots] : groups) {
        const auto& [pi, kind, pad] = key;
        const TimedPath& p = paths.paths[pi];
        switch (kind) {
            case Piece::untouched:
                out.paths.push_back(robots.size() == p.robots.size() ? p : cut(p, robots, p.t_start, p.t_end(), 0, 0));
                break;
            case Piece::prefix: {
                TimedPath piece = cut(p, robots, p.t_start, std::min(p.t_end(), ts), 0, pad ? ts : 0);
                if (piece.duration() > 0) {
                    out.paths.push_back(std::move(piece));
                }
                break;
            }
            case Piece::suffix: {
                TimedPath piece = cut(p, robots, std::max(p.t_start, te), p.t_end(), shift, 0);
                if (piece.duration() > 0) {
                    out.paths.push_back(std::move(piece));
                }
                break;
            }
        }
    }
    TimedPath inserted = local;
    inserted.t_start = ts;
    out.paths.push_back(std::move(inserted));
    std::stable_sort(out.paths.begin(), out.paths.end(), [](const TimedPath& a, const TimedPath& b) {
        return std::tie(a.t_start, a.robots) < std::tie(b.t_start, b.robots);
    });
    return out;
}

}  // namespace arc
