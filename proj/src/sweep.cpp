#include "entcost/sweep.h"

#include "entcost/monte_carlo.h"

namespace entcost {

namespace {

ArchitectureSpec at_point(const ArchitectureSpec& base, const SweepSpec& sweep, double value) {
    ArchitectureSpec spec = base;
    switch (sweep.variable) {
        case SweepVariable::Distance:
            spec.d = static_cast<int>(value);
            break;
        case SweepVariable::NoiseP:
            spec.symmetric_noise_p = value;
            break;
        case SweepVariable::PLink:
            spec.probs.p_link = value;
            break;
        case SweepVariable::MultiplexM:
            spec.multiplex_parallel_attempts = static_cast<int>(value);
            break;
    }
    return spec;
}

CsvRow base_row(const ArchitectureSpec& spec) {
    const PipelineProbabilities resolved = resolved_probabilities(spec);
    CsvRow row;
    row.kind = to_string(spec.kind);
    row.d = spec.d;
    row.p_link = resolved.p_link;
    if (spec.kind == ArchitectureKind::TypeI) {
        row.protocol = to_string(spec.protocol.name);
        row.p = spec.symmetric_noise_p;
        row.p_distill = effective_distill_probability(spec.protocol, resolved);
        row.p_parity = resolved.p_parity;
    }
    return row;
}

std::vector<CsvRow> sweep_rows(const ArchitectureSpec& base, const SweepSpec& sweep,
                               const SimulationConfig* sim, int threads) {
    std::vector<GhzProtocol> protocols = sweep.protocols;
    if (base.kind != ArchitectureKind::TypeI || protocols.empty()) {
        protocols = {base.protocol};
    }

    std::vector<CsvRow> rows;
    rows.reserve(sweep.values.size() * protocols.size());
    for (const double value : sweep.values) {
        for (const GhzProtocol& protocol : protocols) {
            ArchitectureSpec spec = at_point(base, sweep, value);
            spec.protocol = protocol;
            CsvRow row = base_row(spec);
            row.analytic_attempts = estimate(spec).expected_attempts;
            if (sim != nullptr) {
                const AttemptStatistics stats = simulate_architecture_round(spec, *sim, threads);
                row.simulated_mean = stats.mean;
                row.simulated_stderr = stats.std_error;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

ConfigData make_config(std::initializer_list<std::pair<std::string, std::string>> architecture,
                       std::initializer_list<std::pair<std::string, std::string>> probabilities,
                       std::initializer_list<std::pair<std::string, std::string>> sweep) {
    ConfigData config;
    config.source = "<recipe>";
    for (const auto& [k, v] : architecture) {
        config.sections["architecture"][k] = v;
    }
    for (const auto& [k, v] : probabilities) {
        config.sections["probabilities"][k] = v;
    }
    for (const auto& [k, v] : sweep) {
        config.sections["sweep"][k] = v;
    }
    return config;
}

}  // namespace

CsvRow point_row(const ArchitectureSpec& spec, bool per_type) {
    CsvRow row = base_row(spec);
    row.analytic_attempts = estimate(spec, per_type).expected_attempts;
    return row;
}

std::vector<CsvRow> run_sweep(const ArchitectureSpec& spec, const SweepSpec& sweep) {
    return sweep_rows(spec, sweep, nullptr, 1);
}

std::vector<CsvRow> run_sweep_with_simulation(const ArchitectureSpec& spec, const SweepSpec& sweep,
                                              const SimulationConfig& sim, int threads) {
    return sweep_rows(spec, sweep, &sim, threads);
}

CsvRow simulate_point_row(const ArchitectureSpec& spec, const SimulationConfig& sim, int threads) {
    CsvRow row = point_row(spec);
    const AttemptStatistics stats = simulate_architecture_round(spec, sim, threads);
    row.simulated_mean = stats.mean;
    row.simulated_stderr = stats.std_error;
    return row;
}

std::vector<ConfigData> recipe_configs(std::string_view name) {
    // Sweep grids reproducing the four figure settings. The captions pin
    // p_link = 0.5, p_distill = 0.5, p = 1e-2 (fig3) / d = 100 (fig4), and
    // p_link in 0.1..0.5 for the Type II/III panels; the axis grids are free.
    static const char* fig3_distances = "2,3,4,6,8,12,16,24,32,48,64,96";
    static const char* fig4_noise = "0,0.0001,0.0002,0.0005,0.001,0.002,0.005,0.01,0.02,0.05,0.1,0.15,0.2,0.25";
    static const char* patch_distances = "3,5,7,9,11,13,15,17,19,21,23,25";
    static const char* all_protocols = "Plain,Basic,Medium,Refined";

    if (name == "fig3") {
        return {make_config({{"kind", "TypeI"}, {"protocol", "Plain"}},
                            {{"p_link", "0.5"}, {"p_distill", "0.5"}, {"symmetric_noise_p", "0.01"}},
                            {{"variable", "distance"}, {"values", fig3_distances}, {"protocols", all_protocols}})};
    }
    if (name == "fig4") {
        return {make_config({{"kind", "TypeI"}, {"protocol", "Plain"}, {"d", "100"}},
                            {{"p_link", "0.5"}, {"p_distill", "0.5"}},
                            {{"variable", "noise_p"}, {"values", fig4_noise}, {"protocols", all_protocols}})};
    }
    if (name == "fig6" || name == "fig8") {
        std::vector<ConfigData> jobs;
        for (const char* p_link : {"0.1", "0.2", "0.3", "0.4", "0.5"}) {
            if (name == "fig6") {
                jobs.push_back(make_config({{"kind", "TypeII"}},
                                           {{"p_link", p_link}},
                                           {{"variable", "distance"}, {"values", patch_distances}}));
            } else {
                jobs.push_back(make_config({{"kind", "TypeIII"}, {"type3_mode", "TransversalCnot"}},
                                           {{"p_link", p_link}},
                                           {{"variable", "distance"}, {"values", patch_distances}}));
            }
        }
        return jobs;
    }
    throw ConfigError("unknown recipe '" + std::string(name) + "' (expected fig3|fig4|fig6|fig8)");
}

}  // namespace entcost
