#include "arc/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace arc {

using nlohmann::json;

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing '" + path.string() + "'");
    }
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ScenarioError((where.empty() ? "/" : where) + ": " + what);
}

void check_keys(const json& j, const std::string& where, std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional = {}) {
    if (!j.is_object()) {
        fail(where, "expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                           std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known) {
            fail(where + "/" + key, "unknown field");
        }
    }
    for (std::string_view key : required) {
        if (!j.contains(key)) {
            fail(where + "/" + std::string(key), "missing required field");
        }
    }
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) {
        fail(where, "expected a number");
    }
    return j.get<double>();
}

std::size_t count(const json& j, const std::string& where) {
    if (!j.is_number_unsigned()) {
        fail(where, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

std::vector<double> numbers(const json& j, const std::string& where) {
    if (!j.is_array()) {
        fail(where, "expected an array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(number(j[i], where + "/" + std::to_string(i)));
    }
    return out;
}

Vec2 point(const json& j, const std::string& where) {
    const auto v = numbers(j, where);
    if (v.size() != 2) {
        fail(where, "expected [x, y]");
    }
    return {v[0], v[1]};
}

json to_json(Vec2 p) { return json::array({p.x, p.y}); }

Obstacle parse_obstacle(const json& j, const std::string& where) {
    if (!j.is_object() || j.size() != 1) {
        fail(where, "expected {\"circle\": ...} or {\"polygon\": ...}");
    }
    if (j.contains("circle")) {
        const std::string at = where + "/circle";
        check_keys(j["circle"], at, {"center", "radius"});
        Circle c{point(j["circle"]["center"], at + "/center"), number(j["circle"]["radius"], at + "/radius")};
        if (!(c.radius > 0.0)) {
            fail(at + "/radius", "must be positive");
        }
        return c;
    }
    if (j.contains("polygon")) {
        const std::string at = where + "/polygon";
        if (!j["polygon"].is_array()) {
            fail(at, "expected an array of [x, y] vertices");
        }
        std::vector<Vec2> vs;
        for (std::size_t i = 0; i < j["polygon"].size(); ++i) {
            vs.push_back(point(j["polygon"][i], at + "/" + std::to_string(i)));
        }
        try {
            return make_convex_polygon(std::move(vs));
        } catch (const std::invalid_argument& e) {
            fail(at, e.what());
        }
    }
    fail(where, "expected {\"circle\": ...} or {\"polygon\": ...}");
}

json obstacle_json(const Obstacle& o) {
    if (const auto* c = std::get_if<Circle>(&o)) {
        return {{"circle", {{"center", to_json(c->center)}, {"radius", c->radius}}}};
    }
    json vs = json::array();
    for (Vec2 v : std::get<ConvexPolygon>(o).vertices) {
        vs.push_back(to_json(v));
    }
    return {{"polygon", vs}};
}

RobotModel parse_robot(const json& j, const std::string& where) {
    if (!j.is_object()) {
        fail(where, "expected an object");
    }
    try {
        if (j.contains("disc")) {
            check_keys(j, where, {"name", "disc"});
            const std::string at = where + "/disc";
            check_keys(j["disc"], at, {"radius"});
            if (!j["name"].is_string()) {
                fail(where + "/name", "expected a string");
            }
            return RobotModel::disc(j["name"].get<std::string>(), number(j["disc"]["radius"], at + "/radius"));
        }
        if (j.contains("arm")) {
            check_keys(j, where, {"name", "arm"});
            const std::string at = where + "/arm";
            const json& a = j["arm"];
            check_keys(a, at, {"base", "links"}, {"joint_limits", "link_half_width"});
            if (!j["name"].is_string()) {
                fail(where + "/name", "expected a string");
            }
            std::vector<Interval> limits;
            if (a.contains("joint_limits")) {
                if (!a["joint_limits"].is_array()) {
                    fail(at + "/joint_limits", "expected an array of [lo, hi] pairs");
                }
                for (std::size_t i = 0; i < a["joint_limits"].size(); ++i) {
                    const std::string li = at + "/joint_limits/" + std::to_string(i);
                    const auto v = numbers(a["joint_limits"][i], li);
                    if (v.size() != 2) {
                        fail(li, "expected [lo, hi]");
                    }
                    limits.push_back({v[0], v[1]});
                }
            }
            const double half_width =
                a.contains("link_half_width") ? number(a["link_half_width"], at + "/link_half_width")
                                              : kDefaultLinkHalfWidth;
            return RobotModel::planar_arm(j["name"].get<std::string>(), point(a["base"], at + "/base"),
                                          numbers(a["links"], at + "/links"), std::move(limits), half_width);
        }
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
    fail(where, "robot needs a \"disc\" or \"arm\" entry");
}

json robot_json(const RobotModel& r) {
    if (r.is_disc()) {
        return {{"name", r.name()}, {"disc", {{"radius", r.as_disc().radius}}}};
    }
    const PlanarArm& a = r.as_arm();
    json limits = json::array();
    for (const Interval& iv : a.joint_limits) {
        limits.push_back(json::array({iv.lo, iv.hi}));
    }
    return {{"name", r.name()},
            {"arm",
             {{"base", to_json(a.base)},
              {"links", a.link_lengths},
              {"joint_limits", limits},
              {"link_half_width", a.link_half_width}}}};
}

PlannerConfig parse_config(const json& j, const std::string& where) {
    check_keys(j, where, {},
               {"k_neighbors", "resolution", "max_step", "initial_batch", "window", "growth", "decoupled_batch",
                "decoupled_attempts", "composite_batch", "progress_window", "stall_threshold", "completeness_mode",
                "global_sample_cap", "baseline_max_vertices"});
    PlannerConfig c;
    auto size_field = [&](const char* key, std::size_t& out) {
        if (j.contains(key)) {
            out = count(j[key], where + "/" + key);
        }
    };
    auto real_field = [&](const char* key, double& out) {
        if (j.contains(key)) {
            out = number(j[key], where + "/" + key);
        }
    };
    auto int_field = [&](const char* key, int& out) {
        if (j.contains(key)) {
            out = static_cast<int>(count(j[key], where + "/" + key));
        }
    };
    size_field("k_neighbors", c.roadmap.k_neighbors);
    real_field("resolution", c.roadmap.resolution);
    real_field("max_step", c.roadmap.max_step);
    size_field("initial_batch", c.initial_batch);
    int_field("window", c.window);
    int_field("growth", c.growth);
    size_field("decoupled_batch", c.solver.decoupled_batch);
    size_field("decoupled_attempts", c.solver.decoupled_attempts);
    size_field("composite_batch", c.solver.composite_batch);
    size_field("progress_window", c.solver.progress_window);
    real_field("stall_threshold", c.solver.stall_threshold);
    if (j.contains("completeness_mode")) {
        if (!j["completeness_mode"].is_boolean()) {
            fail(where + "/completeness_mode", "expected true or false");
        }
        c.solver.completeness_mode = j["completeness_mode"].get<bool>();
    }
    size_field("global_sample_cap", c.solver.global_sample_cap);
    size_field("baseline_max_vertices", c.baseline_max_vertices);
    try {
        validate_config(c);
    } catch (const std::invalid_argument& e) {
        fail(where, e.what());
    }
    return c;
}

json config_json(const PlannerConfig& c) {
    return {{"k_neighbors", c.roadmap.k_neighbors},
            {"resolution", c.roadmap.resolution},
            {"max_step", c.roadmap.max_step},
            {"initial_batch", c.initial_batch},
            {"window", c.window},
            {"growth", c.growth},
            {"decoupled_batch", c.solver.decoupled_batch},
            {"decoupled_attempts", c.solver.decoupled_attempts},
            {"composite_batch", c.solver.composite_batch},
            {"progress_window", c.solver.progress_window},
            {"stall_threshold", c.solver.stall_threshold},
            {"completeness_mode", c.solver.completeness_mode},
            {"global_sample_cap", c.solver.global_sample_cap},
            {"baseline_max_vertices", c.baseline_max_vertices}};
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into line:column.
        const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ScenarioError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": syntax error");
    }
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    const json doc = parse_json(text);
    check_keys(doc, "", {"environment", "robots", "queries"}, {"name", "planner"});
    Scenario out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            fail("/name", "expected a string");
        }
        out.name = doc["name"].get<std::string>();
    }

    const json& env = doc["environment"];
    check_keys(env, "/environment", {"bounds"}, {"obstacles"});
    check_keys(env["bounds"], "/environment/bounds", {"min", "max"});
    const Aabb bounds{point(env["bounds"]["min"], "/environment/bounds/min"),
                      point(env["bounds"]["max"], "/environment/bounds/max")};
    std::vector<Obstacle> obstacles;
    if (env.contains("obstacles")) {
        if (!env["obstacles"].is_array()) {
            fail("/environment/obstacles", "expected an array");
        }
        for (std::size_t i = 0; i < env["obstacles"].size(); ++i) {
            obstacles.push_back(parse_obstacle(env["obstacles"][i], "/environment/obstacles/" + std::to_string(i)));
        }
    }
    try {
        out.problem.env = Environment(bounds, std::move(obstacles));
    } catch (const std::invalid_argument& e) {
        fail("/environment", e.what());
    }

    if (!doc["robots"].is_array() || doc["robots"].empty()) {
        fail("/robots", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < doc["robots"].size(); ++i) {
        out.problem.robots.push_back(parse_robot(doc["robots"][i], "/robots/" + std::to_string(i)));
    }
    if (!doc["queries"].is_array()) {
        fail("/queries", "expected an array");
    }
    if (doc["queries"].size() != out.problem.robots.size()) {
        fail("/queries", "expected one query per robot (" + std::to_string(out.problem.robots.size()) + ")");
    }
    for (std::size_t i = 0; i < doc["queries"].size(); ++i) {
        const std::string at = "/queries/" + std::to_string(i);
        check_keys(doc["queries"][i], at, {"start", "goal"});
        out.problem.queries.push_back({Configuration(numbers(doc["queries"][i]["start"], at + "/start")),
                                       Configuration(numbers(doc["queries"][i]["goal"], at + "/goal"))});
    }
    if (doc.contains("planner")) {
        out.config = parse_config(doc["planner"], "/planner");
    }
    try {
        validate_instance(out.problem);
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(std::string("semantic error: ") + e.what());
    }
    return out;
}

Scenario load_scenario(const std::filesystem::path& path) {
    try {
        return parse_scenario(read_text(path));
    } catch (const ScenarioError& e) {
        throw ScenarioError(path.string() + ": " + e.what());
    }
}

std::string serialize_scenario(const Scenario& s) {
    json doc;
    doc["name"] = s.name;
    const Aabb& b = s.problem.env.bounds();
    json obstacles = json::array();
    for (const Obstacle& o : s.problem.env.obstacles()) {
        obstacles.push_back(obstacle_json(o));
    }
    doc["environment"] = {{"bounds", {{"min", to_json(b.lo)}, {"max", to_json(b.hi)}}}, {"obstacles", obstacles}};
    doc["robots"] = json::array();
    for (const RobotModel& r : s.problem.robots) {
        doc["robots"].push_back(robot_json(r));
    }
    doc["queries"] = json::array();
    for (const Query& q : s.problem.queries) {
        doc["queries"].push_back({{"start", q.start.values}, {"goal", q.goal.values}});
    }
    if (s.config) {
        doc["planner"] = config_json(*s.config);
    }
    return doc.dump(2) + "\n";
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    write_text(path, serialize_scenario(scenario));
}

std::string serialize_solution(const ProblemInstance& problem, const SolutionSet& solution) {
    json doc;
    doc["paths"] = json::array();
    for (const TimedPath& p : solution.paths) {
        json steps = json::array();
        for (const auto& step : p.steps) {
            json row = json::array();
            for (const Configuration& c : step) {
                row.push_back(c.values);
            }
            steps.push_back(row);
        }
        doc["paths"].push_back({{"robots", p.robots}, {"t_start", p.t_start}, {"steps", steps}});
    }
    const RobotTimelines timelines(solution, problem.robots.size());
    json table = json::array();
    for (std::size_t r = 0; r < problem.robots.size(); ++r) {
        json rows = json::array();
        if (timelines.covers(r)) {
            for (int t = 0; t <= timelines.end(r); ++t) {
                rows.push_back(timelines.config(r, t).values);
            }
        }
        table.push_back({{"robot", r}, {"name", problem.robots[r].name()}, {"configs", rows}});
    }
    doc["timeline"] = table;
    return doc.dump(1) + "\n";
}

SolutionSet parse_solution(std::string_view text) {
    const json doc = parse_json(text);
    check_keys(doc, "", {"paths"}, {"timeline"});
    if (!doc["paths"].is_array()) {
        fail("/paths", "expected an array");
    }
    SolutionSet out;
    for (std::size_t i = 0; i < doc["paths"].size(); ++i) {
        const std::string at = "/paths/" + std::to_string(i);
        const json& p = doc["paths"][i];
        check_keys(p, at, {"robots", "t_start", "steps"});
        TimedPath path;
        if (!p["robots"].is_array()) {
            fail(at + "/robots", "expected an array");
        }
        for (std::size_t k = 0; k < p["robots"].size(); ++k) {
            path.robots.push_back(count(p["robots"][k], at + "/robots/" + std::to_string(k)));
        }
        path.t_start = static_cast<int>(count(p["t_start"], at + "/t_start"));
        if (!p["steps"].is_array()) {
            fail(at + "/steps", "expected an array");
        }
        for (std::size_t t = 0; t < p["steps"].size(); ++t) {
            const std::string st = at + "/steps/" + std::to_string(t);
            if (!p["steps"][t].is_array()) {
                fail(st, "expected an array of configurations");
            }
            std::vector<Configuration> row;
            for (std::size_t k = 0; k < p["steps"][t].size(); ++k) {
                row.emplace_back(numbers(p["steps"][t][k], st + "/" + std::to_string(k)));
            }
            path.steps.push_back(std::move(row));
        }
        out.paths.push_back(std::move(path));
    }
    return out;
}

}  // namespace arc
