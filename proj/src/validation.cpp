#include "entcost/validation.h"

#include "entcost/table.h"

#include <cmath>

#include "entcost/monte_carlo.h"
#include "entcost/parity_noise.h"

namespace entcost {

namespace {

// Same generator as the Monte Carlo module; duplicated here on purpose so
// the check grids cannot drift with simulator internals.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::string rate_label(const DepolarizingRates& rates) {
    std::string label = "rates(";
    for (int i = 0; i < 4; ++i) {
        label += format_double(rates.copy_a[i]) + (i < 3 ? "," : ";");
    }
    for (int i = 0; i < 4; ++i) {
        label += format_double(rates.copy_b[i]) + (i < 3 ? "," : ")");
    }
    return label;
}

}  // namespace

CheckResult check_abs(std::string name, double value, double reference, double tolerance) {
    CheckResult result;
    result.name = std::move(name);
    result.deviation = std::abs(value - reference);
    result.tolerance = tolerance;
    result.passed = result.deviation <= tolerance;
    return result;
}

std::vector<CheckResult> run_oracle_checks(std::uint64_t seed, int random_vectors) {
    std::vector<CheckResult> results;

    for (const double p : {0.0, 0.001, 0.01, 0.05, 0.1, 0.25, 0.5, 0.75}) {
        const DepolarizingRates rates = DepolarizingRates::symmetric(p);
        results.push_back(check_abs("oracle vs formula, symmetric p=" + format_double(p),
                                    exhaustive_parity_accept(rates),
                                    parity_accept_probability(rates).accept_probability, 1e-12));
    }

    SplitMix64 rng{seed ^ 0x5851f42d4c957f2dull};
    for (int k = 0; k < random_vectors; ++k) {
        DepolarizingRates rates;
        for (int i = 0; i < 4; ++i) {
            rates.copy_a[i] = 0.75 * rng.next_unit();
            rates.copy_b[i] = 0.75 * rng.next_unit();
        }
        results.push_back(check_abs("oracle vs formula, " + rate_label(rates),
                                    exhaustive_parity_accept(rates),
                                    parity_accept_probability(rates).accept_probability, 1e-12));
    }
    return results;
}

std::vector<CheckResult> run_monte_carlo_checks(std::uint64_t trials, std::uint64_t seed, int threads) {
    std::vector<CheckResult> results;
    SimulationConfig config;
    config.trials = trials;
    config.seed = seed;

    // Type I GHZ pipelines: all four protocols, p_link {0.3, 0.5}, p {0, 0.01}.
    for (const GhzProtocol& protocol :
         {GhzProtocol::plain(), GhzProtocol::basic(), GhzProtocol::medium(), GhzProtocol::refined()}) {
        for (const double p_link : {0.3, 0.5}) {
            for (const double noise : {0.0, 0.01}) {
                PipelineProbabilities probs;
                probs.p_link = p_link;
                probs.p_distill = 0.5;
                probs.p_parity =
                    parity_accept_probability(DepolarizingRates::symmetric(noise)).accept_probability;
                const double analytic = expected_attempts_per_ghz(protocol, probs);
                const AttemptStatistics stats = simulate_ghz_pipeline(protocol, probs, config, threads);
                std::string name = std::string("ghz pipeline ") + to_string(protocol.name) +
                                   " p_link=" + format_double(p_link) + " p=" + format_double(noise);
                results.push_back(check_abs(std::move(name), stats.mean, analytic, 4.0 * stats.std_error));
            }
        }
    }

    // Type II seam rounds.
    for (const int d : {3, 11}) {
        for (const double p_link : {0.1, 0.5}) {
            ArchitectureSpec spec;
            spec.kind = ArchitectureKind::TypeII;
            spec.d = d;
            spec.probs.p_link = p_link;
            const double analytic = type2_attempts_per_type_round(d, p_link).expected_attempts;
            const AttemptStatistics stats = simulate_architecture_round(spec, config, threads);
            std::string name = "typeII d=" + std::to_string(d) + " p_link=" + format_double(p_link);
            results.push_back(check_abs(std::move(name), stats.mean, analytic, 4.0 * stats.std_error));
        }
    }

    // Type III transversal CNOTs.
    for (const int d : {3, 7}) {
        for (const double p_link : {0.25, 0.5}) {
            ArchitectureSpec spec;
            spec.kind = ArchitectureKind::TypeIII;
            spec.type3_mode = Type3Mode::TransversalCnot;
            spec.d = d;
            spec.probs.p_link = p_link;
            const double analytic = type3_attempts(spec).expected_attempts;
            const AttemptStatistics stats = simulate_architecture_round(spec, config, threads);
            std::string name = "typeIII transversal d=" + std::to_string(d) +
                               " p_link=" + format_double(p_link);
            results.push_back(check_abs(std::move(name), stats.mean, analytic, 4.0 * stats.std_error));
        }
    }

    return results;
}

CheckResult run_spec_check(const ArchitectureSpec& spec, const SimulationConfig& sim, int threads) {
    const double analytic = estimate(spec).expected_attempts;
    const AttemptStatistics stats = simulate_architecture_round(spec, sim, threads);
    return check_abs("configured spec: simulated vs analytic", stats.mean, analytic, 4.0 * stats.std_error);
}

}  // namespace entcost
