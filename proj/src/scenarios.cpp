// Built-in scenario families. Geometry is fixed per (family, n); the random
// seed only enters the planners.

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "arc/scenario_io.hpp"

namespace arc {

namespace {

constexpr double kDiscRadius = 0.3;

struct Family {
    std::string_view name;
    int default_n;
    bool (*valid)(int n);
    Scenario (*make)(int n);
};

Scenario finish(std::string name, Aabb bounds, std::vector<Obstacle> obstacles) {
    Scenario s;
    s.name = std::move(name);
    s.problem.env = Environment(bounds, std::move(obstacles));
    return s;
}

void add(Scenario& s, RobotModel robot, Configuration start, Configuration goal) {
    s.problem.robots.push_back(std::move(robot));
    s.problem.queries.push_back({std::move(start), std::move(goal)});
}

std::string disc_name(std::size_t i) { return "disc" + std::to_string(i); }
std::string arm_name(std::size_t i) { return "arm" + std::to_string(i); }

// n/2 lanes separated by thin walls, one swapping pair per lane. A lane is
// wide enough for one robot to step aside while the other passes.
Scenario row_swap(int n) {
    const int rows = n / 2;
    const double lane = 2.2;
    const double wall = 0.1;
    const double pitch = lane + wall;
    std::vector<Obstacle> walls;
    for (int r = 1; r < rows; ++r) {
        walls.push_back(make_rectangle({0, pitch * r - wall}, {6, pitch * r}));
    }
    Scenario s = finish("row_swap(" + std::to_string(n) + ")", {{0, 0}, {6, pitch * rows - wall}}, std::move(walls));
    for (int r = 0; r < rows; ++r) {
        const double y = pitch * r + lane / 2;
        add(s, RobotModel::disc(disc_name(s.problem.robots.size()), kDiscRadius), {0.5, y}, {5.5, y});
        add(s, RobotModel::disc(disc_name(s.problem.robots.size()), kDiscRadius), {5.5, y}, {0.5, y});
    }
    return s;
}

// Two-link arms on a ring, all pointing outward. The distal link swings from
// one side to the other; neighbours' swing sectors overlap, so arms that get
// out of step collide.
Scenario arm_untangle(int n) {
    const double spacing = 1.0;
    const double radius = spacing / (2.0 * std::sin(kPi / n));
    const double half = radius + 1.5;
    Scenario s = finish("arm_untangle(" + std::to_string(n) + ")", {{-half, -half}, {half, half}}, {});
    for (int i = 0; i < n; ++i) {
        const double phi = 2.0 * kPi * i / n;
        const Vec2 base{radius * std::cos(phi), radius * std::sin(phi)};
        const double out = std::remainder(phi, 2.0 * kPi);
        add(s, RobotModel::planar_arm(arm_name(static_cast<std::size_t>(i)), base, {0.5, 0.7}), {out, 1.1},
            {out, -1.1});
    }
    return s;
}

// One-robot-wide corridor with a one-robot pocket at the middle of its top
// wall. The two discs swap ends.
Scenario inlet(int) {
    std::vector<Obstacle> obstacles{make_rectangle({0, 0.9}, {2.45, 1.7}), make_rectangle({3.55, 0.9}, {6, 1.7})};
    Scenario s = finish("inlet()", {{0, 0}, {6, 1.7}}, std::move(obstacles));
    add(s, RobotModel::disc("left", kDiscRadius), {0.4, 0.45}, {5.6, 0.45});
    add(s, RobotModel::disc("right", kDiscRadius), {5.6, 0.45}, {0.4, 0.45});
    return s;
}

// Arms facing each other in pairs. The top arm swings left to right, the
// bottom one right to left; each goal overlaps the other arm's start, so one
// has to fold out of the way first.
Scenario arm_opposed(int n) {
    const int pairs = n / 2;
    const double pitch = 4.4;
    const double sweep = 0.6;
    const double width = pitch * pairs;
    Scenario s = finish("arm_opposed(" + std::to_string(n) + ")", {{0, -2.7}, {width, 2.7}}, {});
    const std::vector<double> links{0.6, 0.5, 0.4};
    for (int p = 0; p < pairs; ++p) {
        const double x = pitch * (p + 0.5);
        const std::size_t top = s.problem.robots.size();
        add(s, RobotModel::planar_arm(arm_name(top), {x, 1.0}, links), {-kPi / 2 - sweep, 0, 0},
            {-kPi / 2 + sweep, 0, 0});
        add(s, RobotModel::planar_arm(arm_name(top + 1), {x, -1.0}, links), {kPi / 2 - sweep, 0, 0},
            {kPi / 2 + sweep, 0, 0});
    }
    return s;
}

// Stacked one-robot-wide aisles. The shelf above each aisle has a pocket,
// shifted towards the left end, where one disc can wait. Each aisle holds a
// pair swapping ends.
Scenario warehouse(int n) {
    const int aisles = n / 2;
    const double aisle = 0.9;
    const double pocket_depth = 0.8;
    const double shelf = 1.0;
    const double pitch = aisle + shelf;
    const double px0 = 1.95;
    const double px1 = 3.05;
    const double top = pitch * (aisles - 1) + aisle + pocket_depth;
    std::vector<Obstacle> obstacles;
    for (int a = 0; a < aisles; ++a) {
        const double y0 = pitch * a + aisle;
        const double y1 = std::min(y0 + shelf, top);
        obstacles.push_back(make_rectangle({0, y0}, {px0, y1}));
        obstacles.push_back(make_rectangle({px1, y0}, {6, y1}));
        if (a + 1 < aisles) {
            obstacles.push_back(make_rectangle({px0, y0 + pocket_depth}, {px1, y1}));
        }
    }
    Scenario s = finish("warehouse(" + std::to_string(n) + ")", {{0, 0}, {6, top}}, std::move(obstacles));
    for (int a = 0; a < aisles; ++a) {
        const double y = pitch * a + aisle / 2;
        add(s, RobotModel::disc(disc_name(s.problem.robots.size()), kDiscRadius), {0.4, y}, {5.6, y});
        add(s, RobotModel::disc(disc_name(s.problem.robots.size()), kDiscRadius), {5.6, y}, {0.4, y});
    }
    return s;
}

// Four arms around the centre, each sweeping its first link a quarter turn
// across its outward diagonal, and four discs parked on those diagonals that
// must step aside and come back. Robots 0-3 are the discs.
Scenario arm_ring_mixed(int) {
    const double d = 1.0;
    const double half = 3.6;
    // Outward diagonal and sweep start per quadrant: NE, NW, SW, SE.
    const double diag[4] = {kPi / 4, 3 * kPi / 4, -3 * kPi / 4, -kPi / 4};
    const double from[4] = {0, kPi / 2, -kPi, -kPi / 2};
    const Vec2 bases[4] = {{d, d}, {-d, d}, {-d, -d}, {d, -d}};
    // A post just past each parked disc: a straight arm cannot swing over it,
    // so the distal links have to fold on the way round.
    std::vector<Obstacle> posts;
    for (int k = 0; k < 4; ++k) {
        posts.push_back(Circle{bases[k] + 1.3 * Vec2{std::cos(diag[k]), std::sin(diag[k])}, 0.1});
    }
    Scenario s = finish("arm_ring_mixed(8)", {{-half, -half}, {half, half}}, std::move(posts));
    const double park = 0.45 + kDiscRadius;
    for (int k = 0; k < 4; ++k) {
        const Vec2 c = bases[k] + park * Vec2{std::cos(diag[k]), std::sin(diag[k])};
        add(s, RobotModel::disc(disc_name(static_cast<std::size_t>(k)), kDiscRadius), {c.x, c.y}, {c.x, c.y});
    }
    for (int k = 0; k < 4; ++k) {
        add(s, RobotModel::planar_arm(arm_name(static_cast<std::size_t>(4 + k)), bases[k], {0.6, 0.5, 0.4}),
            {from[k], 0, 0}, {from[k] + kPi / 2, 0, 0});
    }
    return s;
}

bool even_up_to(int n, int hi) { return n >= 2 && n <= hi && n % 2 == 0; }

const Family kFamilies[] = {
    {"row_swap", 8, [](int n) { return even_up_to(n, 64); }, row_swap},
    {"arm_untangle", 4, [](int n) { return n >= 2 && n <= 32; }, arm_untangle},
    {"inlet", 2, [](int n) { return n == 2; }, inlet},
    {"arm_opposed", 2, [](int n) { return n == 2 || n == 4; }, arm_opposed},
    {"warehouse", 8, [](int n) { return even_up_to(n, 32); }, warehouse},
    {"arm_ring_mixed", 8, [](int n) { return n == 8; }, arm_ring_mixed},
};

const Family& find_family(std::string_view name) {
    for (const Family& f : kFamilies) {
        if (f.name == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown scenario family '" + std::string(name) + "'");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

const std::vector<std::string>& scenario_families() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const Family& f : kFamilies) {
            out.emplace_back(f.name);
        }
        return out;
    }();
    return names;
}

FamilySpec parse_family(std::string_view text) {
    text = trim(text);
    const auto open = text.find('(');
    FamilySpec spec;
    spec.family = std::string(trim(text.substr(0, open)));
    const Family& family = find_family(spec.family);
    spec.n = family.default_n;
    if (open != std::string_view::npos) {
        if (text.back() != ')') {
            throw std::invalid_argument("malformed scenario '" + std::string(text) + "': missing ')'");
        }
        const std::string_view arg = trim(text.substr(open + 1, text.size() - open - 2));
        if (!arg.empty()) {
            const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), spec.n);
            if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
                throw std::invalid_argument("malformed robot count in '" + std::string(text) + "'");
            }
        }
    }
    if (!family.valid(spec.n)) {
        throw std::invalid_argument(spec.family + " does not support n = " + std::to_string(spec.n));
    }
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    if (spec.family == "inlet") {
        return "inlet()";
    }
    return spec.family + "(" + std::to_string(spec.n) + ")";
}

Scenario generate_scenario(const FamilySpec& spec) {
    const Family& family = find_family(spec.family);
    if (!family.valid(spec.n)) {
        throw std::invalid_argument(spec.family + " does not support n = " + std::to_string(spec.n));
    }
    Scenario s = family.make(spec.n);
    validate_instance(s.problem);
    return s;
}

}  // namespace arc
