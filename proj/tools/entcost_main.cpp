#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entcost/config.h"
#include "entcost/monte_carlo.h"
#include "entcost/sweep.h"
#include "entcost/table.h"
#include "entcost/validation.h"

namespace {

using namespace entcost;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    std::string config_path;
    std::string recipe;
    std::vector<std::string> sets;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string out_path;
    std::string dump_config_path;
    std::string format = "csv";
    bool force = false;
    int threads = 1;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts, bool with_recipe) {
    cmd->add_option("--config", opts.config_path, "configuration file (INI sections)");
    if (with_recipe) {
        cmd->add_option("--recipe", opts.recipe, "figure preset: fig3|fig4|fig6|fig8");
    }
    cmd->add_option("--set", opts.sets, "override a config key: key=value or section.key=value");
    cmd->add_option("--seed", opts.seed, "override [simulation] seed");
    cmd->add_option("--trials", opts.trials, "override [simulation] trials");
    cmd->add_option("--out", opts.out_path, "output file path");
    cmd->add_option("--format", opts.format, "output format: csv|json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--force", opts.force, "overwrite an existing output file");
    cmd->add_option("--threads", opts.threads, "worker threads for simulation")->check(CLI::PositiveNumber);
    cmd->add_option("--dump-config", opts.dump_config_path, "write the resolved configuration to a file");
}

std::vector<ConfigData> load_jobs(const CommonOptions& opts, bool recipe_allowed) {
    std::vector<ConfigData> jobs;
    if (!opts.recipe.empty()) {
        if (!opts.config_path.empty()) {
            throw ConfigError("--config and --recipe are mutually exclusive");
        }
        jobs = recipe_configs(opts.recipe);
    } else if (!opts.config_path.empty()) {
        jobs.push_back(load_ini_file(opts.config_path));
    } else {
        throw ConfigError(recipe_allowed ? "either --config or --recipe is required"
                                         : "--config is required");
    }
    for (ConfigData& job : jobs) {
        for (const std::string& assignment : opts.sets) {
            apply_override(job, assignment);
        }
        if (opts.seed) {
            job.sections["simulation"]["seed"] = std::to_string(*opts.seed);
        }
        if (opts.trials) {
            job.sections["simulation"]["trials"] = std::to_string(*opts.trials);
        }
    }
    // overrides can collapse recipe jobs into duplicates; keep the first of each
    std::vector<ConfigData> unique;
    for (ConfigData& job : jobs) {
        bool seen = false;
        for (const ConfigData& kept : unique) {
            if (kept == job) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            unique.push_back(std::move(job));
        }
    }
    return unique;
}

OutputFormat parse_format(const CommonOptions& opts) {
    const auto format = output_format_from_string(opts.format);
    if (!format) {
        throw ConfigError("--format: expected csv or json, got '" + opts.format + "'");
    }
    return *format;
}

void write_file(const std::string& path, const std::string& content, bool force) {
    if (!force && std::filesystem::exists(path)) {
        throw ConfigError("output file '" + path + "' exists; pass --force to overwrite");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot write to '" + path + "'");
    }
    out << content;
}

void maybe_dump_config(const CommonOptions& opts, const std::vector<ResolvedRun>& runs) {
    if (opts.dump_config_path.empty()) {
        return;
    }
    std::string content;
    for (size_t i = 0; i < runs.size(); ++i) {
        if (runs.size() > 1) {
            content += "# job " + std::to_string(i + 1) + "\n";
        }
        content += to_ini(runs[i]);
        if (i + 1 < runs.size()) {
            content += "\n";
        }
    }
    write_file(opts.dump_config_path, content, opts.force);
}

void print_estimate(const ResolvedRun& run, const EstimateResult& result) {
    const ArchitectureSpec& spec = run.spec;
    const PipelineProbabilities resolved = resolved_probabilities(spec);
    std::cout << "kind              = " << to_string(spec.kind) << "\n";
    std::cout << "d                 = " << spec.d << "\n";
    if (spec.kind == ArchitectureKind::TypeI) {
        std::cout << "protocol          = " << to_string(spec.protocol.name)
                  << " (n = " << spec.protocol.bell_pairs_per_copy << ", distillation "
                  << (spec.protocol.uses_distillation ? "on" : "off") << ")\n";
    }
    if (spec.kind == ArchitectureKind::TypeIII) {
        std::cout << "type3_mode        = " << to_string(spec.type3_mode) << "\n";
    }
    std::cout << "p_link            = " << format_double(resolved.p_link);
    if (spec.multiplex_parallel_attempts) {
        std::cout << " (multiplexed, M = " << *spec.multiplex_parallel_attempts
                  << ", base p_link = " << format_double(spec.probs.p_link) << ")";
    }
    std::cout << "\n";
    if (spec.kind == ArchitectureKind::TypeI) {
        std::cout << "p_distill         = " << format_double(effective_distill_probability(spec.protocol, resolved))
                  << "\n";
        std::cout << "p_parity          = " << format_double(resolved.p_parity);
        if (spec.symmetric_noise_p) {
            std::cout << " (from symmetric_noise_p = " << format_double(*spec.symmetric_noise_p) << ")";
        }
        std::cout << "\n";
        std::cout << "independent_generators_only = " << (spec.independent_generators_only ? "true" : "false")
                  << "\n";
    }
    std::cout << "formula           = " << result.formula_tag << "\n";
    std::cout << "ghz_states_or_bell_pairs_needed = " << result.ghz_states_or_bell_pairs_needed << "\n";
    std::cout << "expected_attempts = " << format_double(result.expected_attempts) << "\n";
    if (result.wall_clock_seconds) {
        std::cout << "wall_clock_seconds = " << format_double(*result.wall_clock_seconds) << "\n";
    }
}

int cmd_estimate(const CommonOptions& opts, bool per_type) {
    const std::vector<ConfigData> jobs = load_jobs(opts, false);
    const ResolvedRun run = resolve(jobs.front());
    const EstimateResult result = estimate(run.spec, per_type);
    print_estimate(run, result);
    maybe_dump_config(opts, {run});
    if (!opts.out_path.empty()) {
        write_file(opts.out_path, render_table({point_row(run.spec, per_type)}, parse_format(opts)), opts.force);
    }
    return kExitOk;
}

int cmd_sweep(const CommonOptions& opts) {
    const std::vector<ConfigData> jobs = load_jobs(opts, true);
    if (opts.out_path.empty()) {
        throw ConfigError("sweep requires --out <path>");
    }
    std::vector<ResolvedRun> runs;
    std::vector<CsvRow> rows;
    for (const ConfigData& job : jobs) {
        ResolvedRun run = resolve(job);
        if (!run.sweep) {
            throw ConfigError("sweep requires a [sweep] section (variable, values)");
        }
        std::vector<CsvRow> job_rows = run_sweep(run.spec, *run.sweep);
        rows.insert(rows.end(), job_rows.begin(), job_rows.end());
        runs.push_back(std::move(run));
    }
    write_file(opts.out_path, render_table(rows, parse_format(opts)), opts.force);
    maybe_dump_config(opts, runs);
    std::cout << "wrote " << rows.size() << " rows to " << opts.out_path << "\n";
    return kExitOk;
}

int cmd_simulate(const CommonOptions& opts) {
    const std::vector<ConfigData> jobs = load_jobs(opts, true);
    std::vector<ResolvedRun> runs;
    std::vector<CsvRow> rows;
    for (const ConfigData& job : jobs) {
        ResolvedRun run = resolve(job);
        if (run.sweep) {
            std::vector<CsvRow> job_rows =
                run_sweep_with_simulation(run.spec, *run.sweep, run.sim, opts.threads);
            rows.insert(rows.end(), job_rows.begin(), job_rows.end());
        } else {
            rows.push_back(simulate_point_row(run.spec, run.sim, opts.threads));
        }
        runs.push_back(std::move(run));
    }
    const std::string rendered = render_table(rows, parse_format(opts));
    if (opts.out_path.empty()) {
        std::cout << rendered;
    } else {
        write_file(opts.out_path, rendered, opts.force);
        std::cout << "wrote " << rows.size() << " rows to " << opts.out_path << "\n";
    }
    maybe_dump_config(opts, runs);
    return kExitOk;
}

int cmd_validate(const CommonOptions& opts) {
    const std::uint64_t seed = opts.seed.value_or(0);
    const std::uint64_t trials = opts.trials.value_or(100000);

    std::vector<CheckResult> checks = run_oracle_checks(seed);
    std::vector<CheckResult> mc = run_monte_carlo_checks(trials, seed, opts.threads);
    checks.insert(checks.end(), mc.begin(), mc.end());

    if (!opts.config_path.empty() || !opts.recipe.empty()) {
        const std::vector<ConfigData> jobs = load_jobs(opts, true);
        for (const ConfigData& job : jobs) {
            const ResolvedRun run = resolve(job);
            SimulationConfig sim = run.sim;
            sim.seed = seed;
            sim.trials = trials;
            checks.push_back(run_spec_check(run.spec, sim, opts.threads));
        }
    }

    int failures = 0;
    for (const CheckResult& check : checks) {
        if (!check.passed) {
            ++failures;
        }
        std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name
                  << "  (deviation " << format_double(check.deviation) << ", tolerance "
                  << format_double(check.tolerance) << ")\n";
    }
    std::cout << checks.size() - failures << "/" << checks.size() << " checks passed\n";
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement-overhead estimators for distributed surface-code architectures"};
    app.require_subcommand(1);

    CommonOptions estimate_opts;
    bool per_type = false;
    CLI::App* estimate_cmd = app.add_subcommand("estimate", "print the analytic estimate for one configuration");
    add_common_flags(estimate_cmd, estimate_opts, false);
    estimate_cmd->add_flag("--per-type", per_type,
                           "Type I: report one stabilizer type per round (N_type) instead of both (N_round)");

    CommonOptions sweep_opts;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "evaluate a parameter sweep and write a table");
    add_common_flags(sweep_cmd, sweep_opts, true);

    CommonOptions simulate_opts;
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo simulation alongside the analytic values");
    add_common_flags(simulate_cmd, simulate_opts, true);

    CommonOptions validate_opts;
    CLI::App* validate_cmd = app.add_subcommand("validate", "run oracle and Monte Carlo consistency checks");
    add_common_flags(validate_cmd, validate_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (estimate_cmd->parsed()) {
            return cmd_estimate(estimate_opts, per_type);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(sweep_opts);
        }
        if (simulate_cmd->parsed()) {
            return cmd_simulate(simulate_opts);
        }
        if (validate_cmd->parsed()) {
            return cmd_validate(validate_opts);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
