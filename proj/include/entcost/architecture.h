#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "entcost/ghz_pipeline.h"

namespace entcost {

enum class ArchitectureKind { TypeI, TypeII, TypeIII };
enum class Type3Mode { TransversalCnot, Teleportation, LatticeSurgery };

const char* to_string(ArchitectureKind kind);
const char* to_string(Type3Mode mode);
std::optional<ArchitectureKind> architecture_kind_from_string(std::string_view s);
std::optional<Type3Mode> type3_mode_from_string(std::string_view s);

struct ArchitectureSpec {
    ArchitectureKind kind = ArchitectureKind::TypeI;
    int d = 0;
    GhzProtocol protocol;            // Type I only
    PipelineProbabilities probs;     // Type II/III read only p_link
    std::optional<double> symmetric_noise_p;  // overrides probs.p_parity via the parity formula
    bool independent_generators_only = false; // Type I: count d^2 - 1 generators per type
    Type3Mode type3_mode = Type3Mode::TransversalCnot;
    std::optional<int> multiplex_parallel_attempts;  // M: substitutes p_link -> 1-(1-p_link)^M
    std::optional<double> attempt_rate;  // lambda, attempts/second; enables wall-clock output
};

struct EstimateResult {
    double expected_attempts = 0.0;
    std::uint64_t ghz_states_or_bell_pairs_needed = 0;
    std::string formula_tag;
    std::optional<double> wall_clock_seconds;
};

// Probabilities after applying the symmetric-noise override and the
// multiplexing substitution. This is what every estimator consumes.
PipelineProbabilities resolved_probabilities(const ArchitectureSpec& spec);

// Type I, one round of one stabilizer type: N_type(d) = d^2 R(n)
// (d^2 - 1 with independent_generators_only).
EstimateResult type1_attempts_per_type_round(const ArchitectureSpec& spec);

// Type I, one full syndrome round (both stabilizer types):
// N_round(d) = 4 n d^2 / (p_link p_distill p_parity).
EstimateResult type1_attempts_per_round(const ArchitectureSpec& spec);

// Type II, seam stabilizers of one type for one round: (2d - 1) / p_link.
EstimateResult type2_attempts_per_type_round(int d, double p_link);

// Type III: d^2 / p_link for a transversal CNOT or logical teleportation;
// d (2d - 1) / p_link for lattice surgery (2d - 1 seam pairs per round, d rounds).
EstimateResult type3_attempts(const ArchitectureSpec& spec);

// Dispatch on spec.kind; per_type selects N_type over N_round for Type I.
// Fills wall_clock_seconds when attempt_rate is set.
EstimateResult estimate(const ArchitectureSpec& spec, bool per_type = false);

}  // namespace entcost
