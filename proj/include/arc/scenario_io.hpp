// Scenario and solution documents (JSON), plus the built-in scenario
// families.

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arc/problem.hpp"

namespace arc {

struct Scenario {
    std::string name;
    ProblemInstance problem;
    /// Planner settings stored with the scenario, if any.
    std::optional<PlannerConfig> config;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parse or semantic error. The message starts with a location: line and
/// column for syntax errors, a JSON pointer (e.g. /robots/1/disc/radius)
/// for schema and semantic errors.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[nodiscard]] Scenario parse_scenario(std::string_view text);
[[nodiscard]] Scenario load_scenario(const std::filesystem::path& path);
[[nodiscard]] std::string serialize_scenario(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

/// Solution dump: the timed paths as planned, plus a per-robot,
/// per-timestep DOF table.
[[nodiscard]] std::string serialize_solution(const ProblemInstance& problem, const SolutionSet& solution);
[[nodiscard]] SolutionSet parse_solution(std::string_view text);

/// Reads a whole file; throws std::runtime_error naming the path.
[[nodiscard]] std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// Built-in families. Every family is fully deterministic.

struct FamilySpec {
    std::string family;
    int n{0};
};

[[nodiscard]] const std::vector<std::string>& scenario_families();
/// "row_swap(8)", "inlet", "inlet()"; omitted n takes the family default.
[[nodiscard]] FamilySpec parse_family(std::string_view text);
[[nodiscard]] std::string to_string(const FamilySpec& spec);
/// Throws std::invalid_argument for an unknown family or unsupported n.
[[nodiscard]] Scenario generate_scenario(const FamilySpec& spec);

}  // namespace arc
