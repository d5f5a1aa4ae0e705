#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace entcost {

// Raised when an expectation is requested with a zero success probability
// in the pipeline (the expected attempt count would be infinite).
class ZeroProbabilityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class ProtocolName { Plain, Basic, Medium, Refined, Custom };

const char* to_string(ProtocolName name);
std::optional<ProtocolName> protocol_name_from_string(std::string_view s);

// A GHZ generation recipe: how many Bell pairs one GHZ copy consumes (n)
// and whether each of them passes through a 2->1 distillation step.
struct GhzProtocol {
    ProtocolName name = ProtocolName::Plain;
    int bell_pairs_per_copy = 3;  // n
    bool uses_distillation = false;

    bool operator==(const GhzProtocol&) const = default;

    static GhzProtocol plain();    // n = 3, no distillation
    static GhzProtocol basic();    // n = 8
    static GhzProtocol medium();   // n = 16
    static GhzProtocol refined();  // n = 40
    static GhzProtocol custom(int bell_pairs_per_copy, bool uses_distillation);
    static GhzProtocol named(ProtocolName name);  // any of the four presets
};

// Per-attempt success probabilities of the three pipeline stages.
struct PipelineProbabilities {
    double p_link = 0.0;
    double p_distill = 1.0;
    double p_parity = 1.0;
};

void validate(const GhzProtocol& protocol);
void validate(const PipelineProbabilities& probs);

// The p_distill actually applied: 1 when the protocol skips distillation.
double effective_distill_probability(const GhzProtocol& protocol, const PipelineProbabilities& probs);

// Bell pairs consumed per accepted GHZ before retry accounting: 2n
// (two noisy copies, one consumed by the parity projection).
std::uint64_t bell_pairs_per_accepted_ghz(const GhzProtocol& protocol);

// Expected link-generation attempts per accepted GHZ:
//   R(n) = 2n / (p_link * p_distill * p_parity),  p_distill = 1 without distillation.
// Throws ZeroProbabilityError if any applicable probability is zero.
double expected_attempts_per_ghz(const GhzProtocol& protocol, const PipelineProbabilities& probs);

// EPL 2->1 distillation success probability: p_R^2 / 2.
double epl_distill_success(double p_r);

// Effective link success with M parallel attempts per slot: 1 - (1 - p_link)^M.
double effective_link_probability(double p_link, int attempts_per_slot);

}  // namespace entcost
