#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fsolink/errors.hpp"
#include "fsolink/sweep.hpp"
#include "fsolink/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;

struct CommonOptions {
    std::string config_path;
    std::string output_path = "-";
};

fsolink::ScenarioConfig load(const CommonOptions& opts) {
    if (opts.config_path.empty()) {
        return fsolink::default_config();
    }
    return fsolink::load_config_file(opts.config_path);
}

void write_output(const CommonOptions& opts, const std::string& text) {
    if (opts.output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output_path, std::ios::binary);
    if (!out) {
        throw fsolink::ConfigError("cannot open output file '" + opts.output_path + "'");
    }
    out << text;
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("-c,--config", opts.config_path, "Scenario config (JSON); defaults used if omitted")
        ->check(CLI::ExistingFile);
    cmd->add_option("-o,--output", opts.output_path, "Output file, '-' for stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inter-satellite optical link outage simulator"};
    app.require_subcommand(1);

    CommonOptions sweep_opts;
    std::uint64_t sweep_seed = 0;
    std::int64_t sweep_samples = 0;
    bool sweep_mc = false;
    CLI::App* sweep_cmd =
        app.add_subcommand("outage-sweep", "Outage probability over the configured sweep axis");
    add_common(sweep_cmd, sweep_opts);
    CLI::Option* sweep_seed_opt =
        sweep_cmd->add_option("--seed", sweep_seed, "Monte-Carlo seed override");
    CLI::Option* sweep_samples_opt =
        sweep_cmd->add_option("--samples", sweep_samples, "Monte-Carlo sample count override")
            ->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--mc", sweep_mc, "Enable the Monte-Carlo column");

    CommonOptions disp_opts;
    CLI::App* disp_cmd = app.add_subcommand(
        "displacement", "Link distance, arrival time and displacement for the constellation");
    add_common(disp_cmd, disp_opts);

    CommonOptions design_opts;
    CLI::App* design_cmd = app.add_subcommand(
        "design-search", "Smallest constellation meeting each configured outage target");
    add_common(design_cmd, design_opts);

    CommonOptions validate_opts;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Run the built-in consistency checks");
    add_common(validate_cmd, validate_opts);

    CommonOptions mc_opts;
    std::uint64_t mc_seed = 0;
    std::int64_t mc_samples = 0;
    CLI::App* mc_cmd = app.add_subcommand(
        "mc-estimate", "Monte-Carlo outage estimate for the configured scenario");
    add_common(mc_cmd, mc_opts);
    mc_cmd->add_option("--seed", mc_seed, "Sample stream seed")->required();
    CLI::Option* mc_samples_opt =
        mc_cmd->add_option("--samples", mc_samples, "Sample count override")
            ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sweep_cmd->parsed()) {
            fsolink::ScenarioConfig config = load(sweep_opts);
            if (sweep_mc) {
                config.monte_carlo.enabled = true;
            }
            if (sweep_seed_opt->count() > 0) {
                config.monte_carlo.seed = sweep_seed;
            }
            if (sweep_samples_opt->count() > 0) {
                config.monte_carlo.samples = sweep_samples;
            }
            const fsolink::SweepResult result = fsolink::run_outage_sweep(config);
            write_output(sweep_opts, fsolink::sweep_csv(result));
            return result.any_convergence_failure ? kExitConvergence : kExitOk;
        }
        if (disp_cmd->parsed()) {
            const fsolink::ScenarioConfig config = load(disp_opts);
            write_output(disp_opts, fsolink::displacement_csv(fsolink::run_displacement(config)));
            return kExitOk;
        }
        if (design_cmd->parsed()) {
            const fsolink::ScenarioConfig config = load(design_opts);
            write_output(design_opts, fsolink::design_csv(fsolink::run_design_search(config)));
            return kExitOk;
        }
        if (validate_cmd->parsed()) {
            const fsolink::ScenarioConfig config = load(validate_opts);
            bool all_passed = true;
            std::string report;
            for (const fsolink::CheckResult& check : fsolink::run_all_checks(config)) {
                report += std::string(check.passed ? "[pass] " : "[FAIL] ") + check.name + ": " +
                          check.detail + "\n";
                all_passed = all_passed && check.passed;
            }
            write_output(validate_opts, report);
            return all_passed ? kExitOk : kExitConvergence;
        }
        if (mc_cmd->parsed()) {
            fsolink::ScenarioConfig config = load(mc_opts);
            config.monte_carlo.enabled = true;
            config.monte_carlo.seed = mc_seed;
            if (mc_samples_opt->count() > 0) {
                config.monte_carlo.samples = mc_samples;
            }
            write_output(mc_opts, fsolink::mc_estimate_csv(fsolink::run_mc_estimate(config)));
            return kExitOk;
        }
    } catch (const fsolink::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const fsolink::ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}
