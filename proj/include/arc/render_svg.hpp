// Static SVG pictures of a problem and, optionally, its solution.

#pragma once

#include <filesystem>
#include <string>

#include "arc/problem.hpp"

namespace arc {

/// Bounds, obstacles, start (hollow) and goal (filled) markers. With a
/// solution: one polyline per disc robot, and arms drawn at sampled
/// timesteps with opacity rising towards the end.
[[nodiscard]] std::string render_svg(const ProblemInstance& problem, const SolutionSet* solution = nullptr);

/// Throws std::runtime_error when the file cannot be written.
void write_svg(const std::filesystem::path& path, const ProblemInstance& problem,
               const SolutionSet* solution = nullptr);

}  // namespace arc
