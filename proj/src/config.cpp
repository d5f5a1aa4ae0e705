#include "entcost/config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "entcost/table.h"

namespace entcost {

namespace {

const std::map<std::string, std::vector<std::string>>& schema() {
    static const std::map<std::string, std::vector<std::string>> known{
        {"architecture",
         {"kind", "d", "protocol", "bell_pairs_per_copy", "uses_distillation",
          "independent_generators_only", "type3_mode", "attempt_rate"}},
        {"probabilities", {"p_link", "p_distill", "p_parity", "symmetric_noise_p", "multiplex_M"}},
        {"sweep", {"variable", "values", "protocols"}},
        {"simulation", {"trials", "seed", "confidence_level"}},
    };
    return known;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> items;
    size_t start = 0;
    while (start <= s.size()) {
        const size_t comma = s.find(',', start);
        const std::string_view item = trim(s.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (!item.empty()) {
            items.emplace_back(item);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return items;
}

[[noreturn]] void fail(const std::string& section, const std::string& key, const std::string& what) {
    throw ConfigError("[" + section + "] " + key + ": " + what);
}

double parse_double(const std::string& section, const std::string& key, const std::string& text) {
    const std::string_view t = trim(text);
    double value = 0.0;
    const auto result = std::from_chars(t.data(), t.data() + t.size(), value);
    if (result.ec != std::errc{} || result.ptr != t.data() + t.size()) {
        fail(section, key, "expected a number, got '" + std::string(t) + "'");
    }
    return value;
}

std::int64_t parse_int(const std::string& section, const std::string& key, const std::string& text) {
    const std::string_view t = trim(text);
    std::int64_t value = 0;
    const auto result = std::from_chars(t.data(), t.data() + t.size(), value);
    if (result.ec != std::errc{} || result.ptr != t.data() + t.size()) {
        fail(section, key, "expected an integer, got '" + std::string(t) + "'");
    }
    return value;
}

std::uint64_t parse_uint(const std::string& section, const std::string& key, const std::string& text) {
    const std::string_view t = trim(text);
    std::uint64_t value = 0;
    const auto result = std::from_chars(t.data(), t.data() + t.size(), value);
    if (result.ec != std::errc{} || result.ptr != t.data() + t.size()) {
        fail(section, key, "expected an unsigned integer, got '" + std::string(t) + "'");
    }
    return value;
}

bool parse_bool(const std::string& section, const std::string& key, const std::string& text) {
    const std::string_view t = trim(text);
    if (t == "true" || t == "1" || t == "yes") {
        return true;
    }
    if (t == "false" || t == "0" || t == "no") {
        return false;
    }
    fail(section, key, "expected true/false, got '" + std::string(t) + "'");
}

class Fields {
public:
    Fields(const ConfigData& config, std::string section) : section_(std::move(section)) {
        const auto it = config.sections.find(section_);
        if (it != config.sections.end()) {
            fields_ = &it->second;
        }
    }

    const std::string* find(const std::string& key) const {
        if (fields_ == nullptr) {
            return nullptr;
        }
        const auto it = fields_->find(key);
        return it == fields_->end() ? nullptr : &it->second;
    }

    const std::string& require(const std::string& key) const {
        const std::string* value = find(key);
        if (value == nullptr) {
            throw ConfigError("missing required key '" + key + "' in section [" + section_ + "]");
        }
        return *value;
    }

    std::optional<double> get_double(const std::string& key) const {
        const std::string* v = find(key);
        return v ? std::optional<double>(parse_double(section_, key, *v)) : std::nullopt;
    }

    std::optional<std::int64_t> get_int(const std::string& key) const {
        const std::string* v = find(key);
        return v ? std::optional<std::int64_t>(parse_int(section_, key, *v)) : std::nullopt;
    }

    std::optional<std::uint64_t> get_uint(const std::string& key) const {
        const std::string* v = find(key);
        return v ? std::optional<std::uint64_t>(parse_uint(section_, key, *v)) : std::nullopt;
    }

    std::optional<bool> get_bool(const std::string& key) const {
        const std::string* v = find(key);
        return v ? std::optional<bool>(parse_bool(section_, key, *v)) : std::nullopt;
    }

    void reject(const std::string& key, const std::string& why) const {
        if (find(key) != nullptr) {
            fail(section_, key, why);
        }
    }

    const std::string& section() const { return section_; }

private:
    std::string section_;
    const std::map<std::string, std::string>* fields_ = nullptr;
};

}  // namespace

ConfigData parse_ini(std::string_view text, std::string source_name) {
    ConfigData config;
    config.source = std::move(source_name);
    std::string current;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const size_t comment = line.find_first_of("#;");
        if (comment != std::string_view::npos) {
            line = line.substr(0, comment);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(config.source + ":" + std::to_string(line_no) + ": unterminated section header");
            }
            current = std::string(trim(line.substr(1, line.size() - 2)));
            if (schema().count(current) == 0) {
                throw ConfigError(config.source + ":" + std::to_string(line_no) + ": unknown section [" + current + "]");
            }
            if (config.sections.count(current) != 0) {
                throw ConfigError(config.source + ":" + std::to_string(line_no) + ": duplicate section [" + current + "]");
            }
            config.sections[current];
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(config.source + ":" + std::to_string(line_no) + ": expected 'key = value', got '" +
                              std::string(line) + "'");
        }
        if (current.empty()) {
            throw ConfigError(config.source + ":" + std::to_string(line_no) + ": key outside any [section]");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        const auto& keys = schema().at(current);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw ConfigError(config.source + ":" + std::to_string(line_no) + ": unknown key '" + key +
                              "' in section [" + current + "]");
        }
        if (config.sections[current].count(key) != 0) {
            throw ConfigError(config.source + ":" + std::to_string(line_no) + ": duplicate key '" + key +
                              "' in section [" + current + "]");
        }
        config.sections[current][key] = value;
    }
    return config;
}

ConfigData load_ini_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ini(buffer.str(), path);
}

void apply_override(ConfigData& config, std::string_view assignment) {
    const size_t eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError("--set expects key=value, got '" + std::string(assignment) + "'");
    }
    std::string key{trim(assignment.substr(0, eq))};
    const std::string value{trim(assignment.substr(eq + 1))};
    std::string section;
    const size_t dot = key.find('.');
    if (dot != std::string_view::npos) {
        section = key.substr(0, dot);
        key = key.substr(dot + 1);
        if (schema().count(section) == 0) {
            throw ConfigError("--set: unknown section '" + section + "'");
        }
    } else {
        for (const auto& [sec, keys] : schema()) {
            if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
                section = sec;
                break;
            }
        }
        if (section.empty()) {
            throw ConfigError("--set: unknown key '" + key + "'");
        }
    }
    const auto& keys = schema().at(section);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw ConfigError("--set: unknown key '" + key + "' in section [" + section + "]");
    }
    config.sections[section][key] = value;
}

const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::Distance: return "distance";
        case SweepVariable::NoiseP: return "noise_p";
        case SweepVariable::PLink: return "p_link";
        case SweepVariable::MultiplexM: return "multiplex_M";
    }
    return "?";
}

std::optional<SweepVariable> sweep_variable_from_string(std::string_view s) {
    for (SweepVariable v : {SweepVariable::Distance, SweepVariable::NoiseP, SweepVariable::PLink,
                            SweepVariable::MultiplexM}) {
        if (s == to_string(v)) {
            return v;
        }
    }
    return std::nullopt;
}

namespace {

std::optional<SweepSpec> resolve_sweep(const ConfigData& config, ArchitectureKind kind) {
    const auto it = config.sections.find("sweep");
    if (it == config.sections.end() || it->second.empty()) {
        return std::nullopt;
    }
    const Fields sweep_fields(config, "sweep");
    SweepSpec sweep;

    const auto variable = sweep_variable_from_string(trim(sweep_fields.require("variable")));
    if (!variable) {
        fail("sweep", "variable", "expected one of distance|noise_p|p_link|multiplex_M");
    }
    sweep.variable = *variable;
    if (sweep.variable == SweepVariable::NoiseP && kind != ArchitectureKind::TypeI) {
        fail("sweep", "variable", "noise_p sweeps apply only to kind = TypeI");
    }

    const std::vector<std::string> raw_values = split_list(sweep_fields.require("values"));
    if (raw_values.empty()) {
        fail("sweep", "values", "list must be non-empty");
    }
    for (const std::string& raw : raw_values) {
        sweep.values.push_back(parse_double("sweep", "values", raw));
    }
    for (size_t i = 0; i + 1 < sweep.values.size(); ++i) {
        if (!(sweep.values[i] < sweep.values[i + 1])) {
            fail("sweep", "values", "list must be strictly increasing");
        }
    }
    for (const double v : sweep.values) {
        switch (sweep.variable) {
            case SweepVariable::Distance:
            case SweepVariable::MultiplexM:
                if (v < 1.0 || v != std::floor(v)) {
                    fail("sweep", "values", "entries must be positive integers for variable = " +
                                                std::string(to_string(sweep.variable)));
                }
                break;
            case SweepVariable::NoiseP:
                if (v < 0.0 || v > 0.75) {
                    fail("sweep", "values", "noise_p entries must lie in [0, 3/4]");
                }
                break;
            case SweepVariable::PLink:
                if (!(v > 0.0) || v > 1.0) {
                    fail("sweep", "values", "p_link entries must lie in (0, 1]");
                }
                break;
        }
    }

    if (const std::string* protocols = sweep_fields.find("protocols")) {
        if (kind != ArchitectureKind::TypeI) {
            fail("sweep", "protocols", "protocol lists apply only to kind = TypeI");
        }
        for (const std::string& name : split_list(*protocols)) {
            const auto parsed = protocol_name_from_string(name);
            if (!parsed || *parsed == ProtocolName::Custom) {
                fail("sweep", "protocols", "expected Plain|Basic|Medium|Refined, got '" + name + "'");
            }
            sweep.protocols.push_back(GhzProtocol::named(*parsed));
        }
        if (sweep.protocols.empty()) {
            fail("sweep", "protocols", "list must be non-empty");
        }
    }
    return sweep;
}

}  // namespace

ResolvedRun resolve(const ConfigData& config) {
    for (const auto& [section, keys] : config.sections) {
        if (schema().count(section) == 0) {
            throw ConfigError("unknown section [" + section + "]");
        }
        const auto& known = schema().at(section);
        for (const auto& [key, value] : keys) {
            if (std::find(known.begin(), known.end(), key) == known.end()) {
                throw ConfigError("unknown key '" + key + "' in section [" + section + "]");
            }
        }
    }

    const Fields arch(config, "architecture");
    const Fields probs(config, "probabilities");
    const Fields sim(config, "simulation");

    ResolvedRun run;

    const std::string& kind_text = arch.require("kind");
    const auto kind = architecture_kind_from_string(trim(kind_text));
    if (!kind) {
        fail("architecture", "kind", "expected TypeI|TypeII|TypeIII, got '" + kind_text + "'");
    }
    run.spec.kind = *kind;

    run.sweep = resolve_sweep(config, run.spec.kind);
    const auto sweeps = [&](SweepVariable v) { return run.sweep && run.sweep->variable == v; };

    // --- architecture ---
    if (const auto d = arch.get_int("d")) {
        if (*d < 1) {
            fail("architecture", "d", "must be >= 1");
        }
        run.spec.d = static_cast<int>(*d);
    } else if (sweeps(SweepVariable::Distance)) {
        run.spec.d = static_cast<int>(run.sweep->values.front());
    } else {
        throw ConfigError("missing required key 'd' in section [architecture]");
    }

    if (run.spec.kind == ArchitectureKind::TypeI) {
        const std::string& protocol_text = arch.require("protocol");
        const auto name = protocol_name_from_string(trim(protocol_text));
        if (!name) {
            fail("architecture", "protocol", "expected Plain|Basic|Medium|Refined|Custom, got '" + protocol_text + "'");
        }
        if (*name == ProtocolName::Custom) {
            const auto n = arch.get_int("bell_pairs_per_copy");
            if (!n) {
                throw ConfigError("missing required key 'bell_pairs_per_copy' in section [architecture] "
                                  "(protocol = Custom)");
            }
            const auto distill = arch.get_bool("uses_distillation");
            if (!distill) {
                throw ConfigError("missing required key 'uses_distillation' in section [architecture] "
                                  "(protocol = Custom)");
            }
            if (*n < 1) {
                fail("architecture", "bell_pairs_per_copy", "must be >= 1");
            }
            run.spec.protocol = GhzProtocol::custom(static_cast<int>(*n), *distill);
        } else {
            arch.reject("bell_pairs_per_copy", "only valid with protocol = Custom");
            arch.reject("uses_distillation", "only valid with protocol = Custom");
            run.spec.protocol = GhzProtocol::named(*name);
        }
        run.spec.independent_generators_only = arch.get_bool("independent_generators_only").value_or(false);
        arch.reject("type3_mode", "only valid for kind = TypeIII");
    } else {
        arch.reject("protocol", "only valid for kind = TypeI");
        arch.reject("bell_pairs_per_copy", "only valid for kind = TypeI");
        arch.reject("uses_distillation", "only valid for kind = TypeI");
        arch.reject("independent_generators_only", "only valid for kind = TypeI");
        if (run.spec.kind == ArchitectureKind::TypeIII) {
            const std::string* mode_text = arch.find("type3_mode");
            if (mode_text != nullptr) {
                const auto mode = type3_mode_from_string(trim(*mode_text));
                if (!mode) {
                    fail("architecture", "type3_mode",
                         "expected TransversalCnot|Teleportation|LatticeSurgery, got '" + *mode_text + "'");
                }
                run.spec.type3_mode = *mode;
            }
        } else {
            arch.reject("type3_mode", "only valid for kind = TypeIII");
        }
    }

    if (const auto rate = arch.get_double("attempt_rate")) {
        if (!(*rate > 0.0)) {
            fail("architecture", "attempt_rate", "must be > 0");
        }
        run.spec.attempt_rate = *rate;
    }

    // --- probabilities ---
    if (const auto p_link = probs.get_double("p_link")) {
        if (!(*p_link > 0.0) || *p_link > 1.0) {
            fail("probabilities", "p_link", "must lie in (0, 1]");
        }
        run.spec.probs.p_link = *p_link;
    } else if (sweeps(SweepVariable::PLink)) {
        run.spec.probs.p_link = run.sweep->values.front();
    } else {
        throw ConfigError("missing required key 'p_link' in section [probabilities]");
    }

    if (run.spec.kind == ArchitectureKind::TypeI) {
        const auto p_distill = probs.get_double("p_distill");
        if (p_distill) {
            if (!(*p_distill > 0.0) || *p_distill > 1.0) {
                fail("probabilities", "p_distill", "must lie in (0, 1]");
            }
            run.spec.probs.p_distill = *p_distill;
        } else if (run.spec.protocol.uses_distillation) {
            throw ConfigError("missing required key 'p_distill' in section [probabilities] "
                              "(protocol uses distillation)");
        }

        const auto symmetric_p = probs.get_double("symmetric_noise_p");
        const auto p_parity = probs.get_double("p_parity");
        if (symmetric_p) {
            if (*symmetric_p < 0.0 || *symmetric_p > 0.75) {
                fail("probabilities", "symmetric_noise_p", "must lie in [0, 3/4]");
            }
            run.spec.symmetric_noise_p = *symmetric_p;
        }
        if (p_parity) {
            if (!(*p_parity > 0.0) || *p_parity > 1.0) {
                fail("probabilities", "p_parity", "must lie in (0, 1]");
            }
            run.spec.probs.p_parity = *p_parity;
        }
        if (!symmetric_p && !p_parity && !sweeps(SweepVariable::NoiseP)) {
            throw ConfigError("missing key in section [probabilities]: TypeI needs p_parity or symmetric_noise_p");
        }
    } else {
        probs.reject("p_distill", "only meaningful for kind = TypeI");
        probs.reject("p_parity", "only meaningful for kind = TypeI");
        probs.reject("symmetric_noise_p", "only meaningful for kind = TypeI");
    }

    if (const auto m = probs.get_int("multiplex_M")) {
        if (*m < 1) {
            fail("probabilities", "multiplex_M", "must be >= 1");
        }
        run.spec.multiplex_parallel_attempts = static_cast<int>(*m);
    } else if (sweeps(SweepVariable::MultiplexM)) {
        run.spec.multiplex_parallel_attempts = static_cast<int>(run.sweep->values.front());
    }

    if (run.sweep && run.spec.kind == ArchitectureKind::TypeI && run.sweep->protocols.empty()) {
        run.sweep->protocols.push_back(run.spec.protocol);
    }

    // --- simulation ---
    if (const auto trials = sim.get_uint("trials")) {
        if (*trials < 1) {
            fail("simulation", "trials", "must be >= 1");
        }
        run.sim.trials = *trials;
    }
    if (const auto seed = sim.get_uint("seed")) {
        run.sim.seed = *seed;
    }
    if (const auto level = sim.get_double("confidence_level")) {
        if (!(*level > 0.0) || !(*level < 1.0)) {
            fail("simulation", "confidence_level", "must lie in (0, 1)");
        }
        run.sim.confidence_level = *level;
    }

    return run;
}

std::string to_ini(const ResolvedRun& run) {
    std::string out;
    const ArchitectureSpec& spec = run.spec;

    out += "[architecture]\n";
    out += "kind = " + std::string(to_string(spec.kind)) + "\n";
    out += "d = " + std::to_string(spec.d) + "\n";
    if (spec.kind == ArchitectureKind::TypeI) {
        out += "protocol = " + std::string(to_string(spec.protocol.name)) + "\n";
        if (spec.protocol.name == ProtocolName::Custom) {
            out += "bell_pairs_per_copy = " + std::to_string(spec.protocol.bell_pairs_per_copy) + "\n";
            out += std::string("uses_distillation = ") + (spec.protocol.uses_distillation ? "true" : "false") + "\n";
        }
        out += std::string("independent_generators_only = ") +
               (spec.independent_generators_only ? "true" : "false") + "\n";
    }
    if (spec.kind == ArchitectureKind::TypeIII) {
        out += "type3_mode = " + std::string(to_string(spec.type3_mode)) + "\n";
    }
    if (spec.attempt_rate) {
        out += "attempt_rate = " + format_double(*spec.attempt_rate) + "\n";
    }

    out += "\n[probabilities]\n";
    out += "p_link = " + format_double(spec.probs.p_link) + "\n";
    if (spec.kind == ArchitectureKind::TypeI) {
        out += "p_distill = " + format_double(spec.probs.p_distill) + "\n";
        if (spec.symmetric_noise_p) {
            out += "symmetric_noise_p = " + format_double(*spec.symmetric_noise_p) + "\n";
        } else if (!(run.sweep && run.sweep->variable == SweepVariable::NoiseP)) {
            out += "p_parity = " + format_double(spec.probs.p_parity) + "\n";
        }
    }
    if (spec.multiplex_parallel_attempts) {
        out += "multiplex_M = " + std::to_string(*spec.multiplex_parallel_attempts) + "\n";
    }

    if (run.sweep) {
        out += "\n[sweep]\n";
        out += "variable = " + std::string(to_string(run.sweep->variable)) + "\n";
        out += "values = ";
        for (size_t i = 0; i < run.sweep->values.size(); ++i) {
            if (i > 0) {
                out += ",";
            }
            out += format_double(run.sweep->values[i]);
        }
        out += "\n";
        const bool default_protocols =
            run.sweep->protocols.size() == 1 && run.sweep->protocols.front() == spec.protocol;
        if (spec.kind == ArchitectureKind::TypeI && !run.sweep->protocols.empty() && !default_protocols) {
            out += "protocols = ";
            for (size_t i = 0; i < run.sweep->protocols.size(); ++i) {
                if (i > 0) {
                    out += ",";
                }
                out += to_string(run.sweep->protocols[i].name);
            }
            out += "\n";
        }
    }

    out += "\n[simulation]\n";
    out += "trials = " + std::to_string(run.sim.trials) + "\n";
    out += "seed = " + std::to_string(run.sim.seed) + "\n";
    out += "confidence_level = " + format_double(run.sim.confidence_level) + "\n";
    return out;
}

}  // namespace entcost
