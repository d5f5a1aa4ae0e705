#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entcost/config.h"

namespace entcost {

struct CheckResult {
    std::string name;
    bool passed = false;
    double deviation = 0.0;
    double tolerance = 0.0;
};

// |value - reference| <= tolerance, recorded with the observed deviation.
CheckResult check_abs(std::string name, double value, double reference, double tolerance);

// Exhaustive Pauli enumeration vs the closed-form acceptance probability:
// a fixed symmetric grid plus `random_vectors` seeded asymmetric rate
// vectors, each required to agree within 1e-12.
std::vector<CheckResult> run_oracle_checks(std::uint64_t seed, int random_vectors = 50);

// Simulated mean vs analytic value, within 4 standard errors, over a fixed
// matrix: all four protocols x p_link {0.3, 0.5} x symmetric p {0, 0.01}
// (p_distill 0.5), Type II (d {3, 11} x p_link {0.1, 0.5}) and Type III
// transversal (d {3, 7} x p_link {0.25, 0.5}).
std::vector<CheckResult> run_monte_carlo_checks(std::uint64_t trials, std::uint64_t seed, int threads = 1);

// Simulated vs analytic for one configured architecture.
CheckResult run_spec_check(const ArchitectureSpec& spec, const SimulationConfig& sim, int threads = 1);

}  // namespace entcost
