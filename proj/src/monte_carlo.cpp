#include "entcost/monte_carlo.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>

namespace entcost {

namespace {

// Per-trial generator. Streams are derived from (seed, trial index) alone,
// so a run is reproducible for any partitioning of trials across threads.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double next_unit() {  // [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_unit() < p; }
};

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64{mix64(seed ^ mix64(trial + 0x6a09e667f3bcc909ull))};
}

std::uint64_t geometric_attempts(double p, SplitMix64& rng) {
    std::uint64_t attempts = 1;
    while (!rng.bernoulli(p)) {
        ++attempts;
    }
    return attempts;
}

// Link attempts consumed to assemble one GHZ copy (n Bell pairs).
std::uint64_t ghz_copy_attempts(const GhzProtocol& protocol, const PipelineProbabilities& probs,
                                SplitMix64& rng) {
    std::uint64_t attempts = 0;
    if (protocol.uses_distillation) {
        const int units = protocol.bell_pairs_per_copy / 2;  // one 2->1 unit per surviving pair
        for (int u = 0; u < units; ++u) {
            for (;;) {
                attempts += geometric_attempts(probs.p_link, rng);
                attempts += geometric_attempts(probs.p_link, rng);
                if (rng.bernoulli(probs.p_distill)) {
                    break;  // keep the control pair
                }
                // both pairs discarded, start the unit over
            }
        }
    } else {
        for (int pair = 0; pair < protocol.bell_pairs_per_copy; ++pair) {
            attempts += geometric_attempts(probs.p_link, rng);
        }
    }
    return attempts;
}

std::uint64_t ghz_trial(const GhzProtocol& protocol, const PipelineProbabilities& probs, SplitMix64& rng) {
    std::uint64_t attempts = 0;
    for (;;) {
        attempts += ghz_copy_attempts(protocol, probs, rng);
        attempts += ghz_copy_attempts(protocol, probs, rng);
        if (rng.bernoulli(probs.p_parity)) {
            return attempts;
        }
        // parity rejected: both copies are discarded and rebuilt
    }
}

void check_pipeline_inputs(const GhzProtocol& protocol, const PipelineProbabilities& probs) {
    validate(protocol);
    auto require = [](double value, const char* field) {
        if (value == 0.0) {
            throw ZeroProbabilityError(std::string(field) + " = 0 would make every trial run forever");
        }
        if (!(value > 0.0) || value > 1.0) {
            throw std::domain_error(std::string(field) + " must lie in (0, 1], got " + std::to_string(value));
        }
    };
    require(probs.p_link, "p_link");
    require(probs.p_parity, "p_parity");
    if (protocol.uses_distillation) {
        require(probs.p_distill, "p_distill");
        if (protocol.bell_pairs_per_copy % 2 != 0) {
            throw std::invalid_argument("a distilling protocol needs an even bell_pairs_per_copy "
                                        "(2->1 units consume pairs two at a time), got " +
                                        std::to_string(protocol.bell_pairs_per_copy));
        }
    }
}

template <class TrialFn>
AttemptStatistics run_trials(const SimulationConfig& config, int threads, TrialFn&& trial) {
    validate(config);
    if (threads < 1) {
        throw std::invalid_argument("threads must be >= 1, got " + std::to_string(threads));
    }

    std::vector<double> values(config.trials);
    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            SplitMix64 rng = trial_rng(config.seed, i);
            values[i] = trial(rng);
        }
    };

    if (threads == 1 || config.trials < 2) {
        worker(0, config.trials);
    } else {
        const std::uint64_t used = std::min<std::uint64_t>(threads, config.trials);
        std::vector<std::thread> pool;
        pool.reserve(used);
        const std::uint64_t chunk = (config.trials + used - 1) / used;
        for (std::uint64_t t = 0; t < used; ++t) {
            const std::uint64_t begin = t * chunk;
            const std::uint64_t end = std::min(config.trials, begin + chunk);
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    // reduce in trial order so the result is independent of the partitioning
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    const double n = static_cast<double>(config.trials);
    const double mean = sum / n;

    double sq = 0.0;
    for (double v : values) {
        const double dev = v - mean;
        sq += dev * dev;
    }

    AttemptStatistics stats;
    stats.trials = config.trials;
    stats.mean = mean;
    stats.std_error = config.trials > 1 ? std::sqrt(sq / (n - 1.0)) / std::sqrt(n) : 0.0;
    const boost::math::normal_distribution<double> normal;
    const double z = boost::math::quantile(normal, 0.5 * (1.0 + config.confidence_level));
    stats.ci_low = mean - z * stats.std_error;
    stats.ci_high = mean + z * stats.std_error;
    return stats;
}

}  // namespace

void validate(const SimulationConfig& config) {
    if (config.trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (!(config.confidence_level > 0.0) || !(config.confidence_level < 1.0)) {
        throw std::domain_error("confidence_level must lie in (0, 1), got " +
                                std::to_string(config.confidence_level));
    }
}

AttemptStatistics simulate_ghz_pipeline(const GhzProtocol& protocol, const PipelineProbabilities& probs,
                                        const SimulationConfig& config, int threads) {
    check_pipeline_inputs(protocol, probs);
    return run_trials(config, threads, [&](SplitMix64& rng) {
        return static_cast<double>(ghz_trial(protocol, probs, rng));
    });
}

AttemptStatistics simulate_architecture_round(const ArchitectureSpec& spec, const SimulationConfig& config,
                                              int threads) {
    if (spec.d < 1) {
        throw std::invalid_argument("d must be >= 1, got " + std::to_string(spec.d));
    }
    const PipelineProbabilities probs = resolved_probabilities(spec);
    const std::uint64_t dd = static_cast<std::uint64_t>(spec.d) * static_cast<std::uint64_t>(spec.d);

    switch (spec.kind) {
        case ArchitectureKind::TypeI: {
            check_pipeline_inputs(spec.protocol, probs);
            const std::uint64_t ghz_states = 2 * (spec.independent_generators_only ? dd - 1 : dd);
            return run_trials(config, threads, [&, ghz_states](SplitMix64& rng) {
                std::uint64_t attempts = 0;
                for (std::uint64_t g = 0; g < ghz_states; ++g) {
                    attempts += ghz_trial(spec.protocol, probs, rng);
                }
                return static_cast<double>(attempts);
            });
        }
        case ArchitectureKind::TypeII:
        case ArchitectureKind::TypeIII: {
            if (probs.p_link == 0.0) {
                throw ZeroProbabilityError("p_link = 0 would make every trial run forever");
            }
            if (!(probs.p_link > 0.0) || probs.p_link > 1.0) {
                throw std::domain_error("p_link must lie in (0, 1], got " + std::to_string(probs.p_link));
            }
            std::uint64_t pairs = 0;
            if (spec.kind == ArchitectureKind::TypeII) {
                pairs = 2 * static_cast<std::uint64_t>(spec.d) - 1;
            } else {
                pairs = spec.type3_mode == Type3Mode::LatticeSurgery
                            ? static_cast<std::uint64_t>(spec.d) * (2 * static_cast<std::uint64_t>(spec.d) - 1)
                            : dd;
            }
            return run_trials(config, threads, [&, pairs](SplitMix64& rng) {
                std::uint64_t attempts = 0;
                for (std::uint64_t k = 0; k < pairs; ++k) {
                    attempts += geometric_attempts(probs.p_link, rng);
                }
                return static_cast<double>(attempts);
            });
        }
    }
    throw std::invalid_argument("unknown architecture kind");
}

AttemptStatistics sample_parity_projection(const DepolarizingRates& rates, const SimulationConfig& config,
                                           int threads) {
    validate(rates);
    double threshold[8][3];  // cumulative cutoffs for I, X, Y (Z is the remainder)
    for (int q = 0; q < 8; ++q) {
        const double p = q < 4 ? rates.copy_a[q] : rates.copy_b[q - 4];
        threshold[q][0] = 1.0 - p;
        threshold[q][1] = 1.0 - p + p / 3.0;
        threshold[q][2] = 1.0 - p / 3.0;
    }
    return run_trials(config, threads, [&](SplitMix64& rng) {
        int sign = 1;
        for (int q = 0; q < 8; ++q) {
            const double u = rng.next_unit();
            Pauli error = Pauli::Z;
            if (u < threshold[q][0]) {
                error = Pauli::I;
            } else if (u < threshold[q][1]) {
                error = Pauli::X;
            } else if (u < threshold[q][2]) {
                error = Pauli::Y;
            }
            if (has_z_component(error)) {
                sign = -sign;
            }
        }
        return sign > 0 ? 1.0 : 0.0;
    });
}

}  // namespace entcost
