#pragma once

#include <cstdint>

#include "entcost/architecture.h"
#include "entcost/ghz_pipeline.h"
#include "entcost/parity_noise.h"

namespace entcost {

struct SimulationConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    double confidence_level = 0.99;
};

void validate(const SimulationConfig& config);

struct AttemptStatistics {
    double mean = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t trials = 0;
};

// Stochastic realization of the GHZ pipeline. One trial: build two copies
// (geometric link retries per Bell pair; distillation protocols draw two
// fresh pairs plus a p_distill Bernoulli per 2->1 unit, retrying until the
// unit succeeds), then a p_parity Bernoulli; on rejection both copies are
// rebuilt. The trial value is the total number of link attempts consumed.
//
// Deterministic for fixed (protocol, probs, config): per-trial random
// streams are derived from (seed, trial index) alone, and the reduction
// runs in trial order, so any thread count gives bit-identical statistics.
AttemptStatistics simulate_ghz_pipeline(const GhzProtocol& protocol,
                                        const PipelineProbabilities& probs,
                                        const SimulationConfig& config,
                                        int threads = 1);

// One trial = the link attempts of one full round / block operation:
// Type I sums 2d^2 GHZ pipeline costs (2(d^2-1) with the generator flag),
// Type II sums 2d-1 geometric link costs, Type III sums d^2 (transversal /
// teleportation) or d(2d-1) (lattice surgery) geometric link costs.
AttemptStatistics simulate_architecture_round(const ArchitectureSpec& spec,
                                              const SimulationConfig& config,
                                              int threads = 1);

// Acceptance frequency of the parity projection with per-qubit Pauli errors
// drawn from the depolarizing weights; converges to parity_accept_probability.
AttemptStatistics sample_parity_projection(const DepolarizingRates& rates,
                                           const SimulationConfig& config,
                                           int threads = 1);

}  // namespace entcost
