#include "entcost/ghz_pipeline.h"

#include <cctype>
#include <cmath>

namespace entcost {

namespace {

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

const char* to_string(ProtocolName name) {
    switch (name) {
        case ProtocolName::Plain: return "Plain";
        case ProtocolName::Basic: return "Basic";
        case ProtocolName::Medium: return "Medium";
        case ProtocolName::Refined: return "Refined";
        case ProtocolName::Custom: return "Custom";
    }
    return "?";
}

std::optional<ProtocolName> protocol_name_from_string(std::string_view s) {
    for (ProtocolName name : {ProtocolName::Plain, ProtocolName::Basic, ProtocolName::Medium,
                              ProtocolName::Refined, ProtocolName::Custom}) {
        if (iequals(s, to_string(name))) {
            return name;
        }
    }
    return std::nullopt;
}

GhzProtocol GhzProtocol::plain() { return {ProtocolName::Plain, 3, false}; }
GhzProtocol GhzProtocol::basic() { return {ProtocolName::Basic, 8, true}; }
GhzProtocol GhzProtocol::medium() { return {ProtocolName::Medium, 16, true}; }
GhzProtocol GhzProtocol::refined() { return {ProtocolName::Refined, 40, true}; }

GhzProtocol GhzProtocol::custom(int bell_pairs_per_copy, bool uses_distillation) {
    GhzProtocol protocol{ProtocolName::Custom, bell_pairs_per_copy, uses_distillation};
    validate(protocol);
    return protocol;
}

GhzProtocol GhzProtocol::named(ProtocolName name) {
    switch (name) {
        case ProtocolName::Plain: return plain();
        case ProtocolName::Basic: return basic();
        case ProtocolName::Medium: return medium();
        case ProtocolName::Refined: return refined();
        case ProtocolName::Custom: break;
    }
    throw std::invalid_argument("named() requires one of the four preset protocols");
}

void validate(const GhzProtocol& protocol) {
    if (protocol.bell_pairs_per_copy < 1) {
        throw std::invalid_argument("bell_pairs_per_copy must be >= 1, got " +
                                    std::to_string(protocol.bell_pairs_per_copy));
    }
    if (protocol.name != ProtocolName::Custom) {
        const GhzProtocol canonical = GhzProtocol::named(protocol.name);
        if (protocol.bell_pairs_per_copy != canonical.bell_pairs_per_copy ||
            protocol.uses_distillation != canonical.uses_distillation) {
            throw std::invalid_argument(std::string("protocol ") + to_string(protocol.name) +
                                        " has fixed n=" + std::to_string(canonical.bell_pairs_per_copy));
        }
    }
}

void validate(const PipelineProbabilities& probs) {
    auto check = [](double value, const char* field) {
        if (!(value > 0.0) || value > 1.0) {
            throw std::domain_error(std::string(field) + " must lie in (0, 1], got " + std::to_string(value));
        }
    };
    check(probs.p_link, "p_link");
    check(probs.p_distill, "p_distill");
    check(probs.p_parity, "p_parity");
}

double effective_distill_probability(const GhzProtocol& protocol, const PipelineProbabilities& probs) {
    return protocol.uses_distillation ? probs.p_distill : 1.0;
}

std::uint64_t bell_pairs_per_accepted_ghz(const GhzProtocol& protocol) {
    validate(protocol);
    return 2 * static_cast<std::uint64_t>(protocol.bell_pairs_per_copy);
}

double expected_attempts_per_ghz(const GhzProtocol& protocol, const PipelineProbabilities& probs) {
    validate(protocol);
    const double p_distill = effective_distill_probability(protocol, probs);
    auto require_nonzero = [](double value, const char* field) {
        if (value == 0.0) {
            throw ZeroProbabilityError(std::string(field) + " = 0 makes the expected attempt count infinite");
        }
        if (value < 0.0 || value > 1.0) {
            throw std::domain_error(std::string(field) + " must lie in [0, 1], got " + std::to_string(value));
        }
    };
    require_nonzero(probs.p_link, "p_link");
    require_nonzero(p_distill, "p_distill");
    require_nonzero(probs.p_parity, "p_parity");
    return 2.0 * protocol.bell_pairs_per_copy / (probs.p_link * p_distill * probs.p_parity);
}

double epl_distill_success(double p_r) {
    if (p_r < 0.0 || p_r > 1.0) {
        throw std::domain_error("p_R must lie in [0, 1], got " + std::to_string(p_r));
    }
    return 0.5 * p_r * p_r;
}

double effective_link_probability(double p_link, int attempts_per_slot) {
    if (p_link < 0.0 || p_link > 1.0) {
        throw std::domain_error("p_link must lie in [0, 1], got " + std::to_string(p_link));
    }
    if (attempts_per_slot < 1) {
        throw std::invalid_argument("multiplex_M must be >= 1, got " + std::to_string(attempts_per_slot));
    }
    if (attempts_per_slot == 1) {
        return p_link;  // keep the M=1 identity exact
    }
    return 1.0 - std::pow(1.0 - p_link, attempts_per_slot);
}

}  // namespace entcost
