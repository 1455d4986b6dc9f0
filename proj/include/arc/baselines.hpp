// Comparison planners built on the same roadmap and search code as ARC.

#pragma once

#include <cstdint>

#include "arc/problem.hpp"

namespace arc {

/// Prioritized planning in ascending robot order over individual roadmaps
/// of the whole environment. When some robot finds no path, every roadmap
/// grows by a doubling batch and all robots are replanned. Fails once every
/// roadmap holds `config.baseline_max_vertices` vertices.
[[nodiscard]] PlanResult decoupled_prm_baseline(const ProblemInstance& problem, const PlannerConfig& config,
                                                std::uint64_t seed, const Deadline& deadline = Deadline::none());

/// One composite roadmap over all robots and the full environment, grown in
/// batches until start and goal connect. `config.solver.global_sample_cap`
/// bounds the samples when nonzero.
[[nodiscard]] PlanResult composite_prm_baseline(const ProblemInstance& problem, const PlannerConfig& config,
                                                std::uint64_t seed, const Deadline& deadline = Deadline::none());

}  // namespace arc
