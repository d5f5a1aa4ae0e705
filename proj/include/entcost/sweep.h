#pragma once

#include <vector>

#include "entcost/config.h"
#include "entcost/table.h"

namespace entcost {

// Single-point record for `estimate`/`simulate` without a sweep section.
CsvRow point_row(const ArchitectureSpec& spec, bool per_type = false);

// One row per sweep value (x protocol for Type I multi-protocol sweeps).
// Type I rows carry the full-round quantity N_round.
std::vector<CsvRow> run_sweep(const ArchitectureSpec& spec, const SweepSpec& sweep);

// Same rows plus simulated_mean/simulated_stderr from the round simulator.
std::vector<CsvRow> run_sweep_with_simulation(const ArchitectureSpec& spec,
                                              const SweepSpec& sweep,
                                              const SimulationConfig& sim,
                                              int threads = 1);

CsvRow simulate_point_row(const ArchitectureSpec& spec,
                          const SimulationConfig& sim,
                          int threads = 1);

// Named figure presets (fig3, fig4, fig6, fig8): caption parameters
// preloaded as config jobs, one per (template, sweep) combination.
std::vector<ConfigData> recipe_configs(std::string_view name);

}  // namespace entcost
