#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entcost/architecture.h"
#include "entcost/monte_carlo.h"

namespace entcost {

// Config or usage problem; the CLI maps this to exit code 2. The message
// always names the offending section/key or flag.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raw INI-style content: [section] headers, key = value lines, # or ;
// comments. Sections and keys are checked against the known schema when
// resolved, so typos fail loudly.
struct ConfigData {
    std::map<std::string, std::map<std::string, std::string>> sections;
    std::string source = "<config>";

    bool operator==(const ConfigData& other) const { return sections == other.sections; }
};

ConfigData parse_ini(std::string_view text, std::string source_name);
ConfigData load_ini_file(const std::string& path);

// Apply a --set override: "key=value" or "section.key=value". Bare keys are
// looked up in the schema (key names are unique across sections).
void apply_override(ConfigData& config, std::string_view assignment);

enum class SweepVariable { Distance, NoiseP, PLink, MultiplexM };

const char* to_string(SweepVariable v);
std::optional<SweepVariable> sweep_variable_from_string(std::string_view s);

struct SweepSpec {
    SweepVariable variable = SweepVariable::Distance;
    std::vector<double> values;          // non-empty, strictly increasing
    std::vector<GhzProtocol> protocols;  // Type I sweeps; defaults to the architecture's protocol
};

struct ResolvedRun {
    ArchitectureSpec spec;
    std::optional<SweepSpec> sweep;
    SimulationConfig sim;
};

// Validate and convert raw config into a run description. Throws
// ConfigError naming the field on any missing/invalid/unknown entry.
ResolvedRun resolve(const ConfigData& config);

// Serialize a resolved run back to the INI format; resolve(parse_ini(...))
// of the result reproduces the run exactly.
std::string to_ini(const ResolvedRun& run);

}  // namespace entcost
