#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "interp/bounds.hpp"
#include "interp/config.hpp"
#include "interp/errors.hpp"
#include "interp/experiments.hpp"
#include "interp/plot.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitFailureBudget = 3;
constexpr double kFailureBudget = 0.10;

std::optional<std::string> env_seed() {
    if (const char* s = std::getenv("INTERP_SEED"); s && *s) return std::string(s);
    return std::nullopt;
}

int run_command(const std::string& config_path, const std::vector<std::string>& overrides, bool paper_scale,
                unsigned threads, const std::string& out_dir) {
    interp::ExperimentConfig cfg;
    try {
        cfg = interp::resolve_config(interp::KeyValueFile::load(config_path), overrides, paper_scale, env_seed());
        interp::check_estimators(cfg);
    } catch (const interp::Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    const std::string dir = out_dir.empty() ? cfg.output_dir : out_dir;
    const interp::ExperimentResult result = interp::run_experiment(cfg, threads);
    interp::write_outputs(result, cfg, dir);
    std::cout << "wrote " << result.records.size() << " records to " << dir << " (" << result.failures
              << " failed)\n";
    if (result.failure_rate() > kFailureBudget) {
        std::cerr << "solver failure budget exceeded: " << result.failure_rate() * 100.0 << "% of rows failed\n";
        return kExitFailureBudget;
    }
    return kExitOk;
}

int bounds_command(interp::Index n, interp::Index d, double sigma2, double delta) {
    interp::bounds::BoundParams p;
    p.n = n;
    p.d = d;
    p.sigma2 = sigma2;
    p.delta = delta;
    interp::bounds::validate(p);
    auto show = [](const char* name, double v, bool flagged) {
        std::printf("%-28s %.17g%s\n", name, v, flagged ? "  (flagged)" : "");
    };
    show("ideal_lower_gaussian", interp::bounds::ideal_mse_lower_gaussian(p), false);
    const auto ug = interp::bounds::ideal_mse_upper_gaussian(p);
    show("ideal_upper_gaussian", ug.value, ug.flagged);
    show("ideal_lower_subgaussian", interp::bounds::ideal_mse_lower_subgaussian(p), false);
    const auto us = interp::bounds::ideal_mse_upper_subgaussian(p);
    show("ideal_upper_subgaussian", us.value, us.flagged);
    show("ideal_lower_heavy_tailed", interp::bounds::ideal_mse_lower_heavy_tailed(p), false);
    const auto fl = interp::bounds::parsimonious_floor(p, 1.0);
    show("parsimonious_floor_beta1", fl.value, fl.flagged);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interpolating estimators: experiments, plots and reference bounds"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    std::vector<std::string> overrides;
    bool paper_scale = false;
    unsigned threads = 1;
    auto* run = app.add_subcommand("run", "Run an experiment described by a key-value config file");
    run->add_option("config", config_path, "Config file")->required();
    run->add_option("--override", overrides, "key=value setting applied after the file")->take_all();
    run->add_flag("--paper-scale", paper_scale, "Use the published problem sizes");
    run->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    run->add_option("--out", out_dir, "Output directory (default: output_dir from the config)");

    std::string summary_path, style = "paired", plot_out;
    double plot_delta = 0.5;
    bool no_bounds = false;
    auto* plot = app.add_subcommand("plot", "Render a summary.csv as SVG");
    plot->add_option("summary", summary_path, "summary.csv")->required();
    plot->add_option("--style", style, "median | mean | errorbars | paired");
    plot->add_option("--delta", plot_delta, "Confidence parameter of the bound overlays");
    plot->add_flag("--no-bounds", no_bounds, "Omit reference curves");
    plot->add_option("--out", plot_out, "Output directory (default: next to the summary)");

    interp::Index bn = 100, bd = 1000;
    double bsigma2 = 1.0, bdelta = 0.5;
    auto* bounds = app.add_subcommand("bounds", "Print reference curve values");
    bounds->add_option("--n", bn, "Training samples")->required();
    bounds->add_option("--d", bd, "Features")->required();
    bounds->add_option("--sigma2", bsigma2, "Noise variance");
    bounds->add_option("--delta", bdelta, "Confidence parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*run) return run_command(config_path, overrides, paper_scale, threads, out_dir);
        if (*plot) {
            interp::plot::PlotOptions opts;
            opts.style = interp::plot::parse_style(style);
            opts.delta = plot_delta;
            opts.bounds = !no_bounds;
            std::cout << "wrote " << interp::plot::plot_summary_file(summary_path, opts, plot_out) << "\n";
            return kExitOk;
        }
        if (*bounds) return bounds_command(bn, bd, bsigma2, bdelta);
    } catch (const interp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const interp::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const interp::MissingColumn& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
