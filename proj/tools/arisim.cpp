// Command-line front end: runs the three-scheme experiment and the two
// self-check commands (gradient cross-validation and closed-form oracles).
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aris/artifacts.hpp"
#include "aris/channel.hpp"
#include "aris/config.hpp"
#include "aris/objective.hpp"
#include "aris/schemes.hpp"

namespace {

using namespace aris;

struct CommonArgs {
    std::string config_path;
    int seeds_count = 0;                  // 0 = keep config
    std::vector<std::uint64_t> seed_list; // overrides count
    std::string scheme = "all";
    int max_iters = 0;                    // 0 = keep config
    double p_exponent = 0.0;              // 0 = keep config
};

AppConfig resolve_config(const CommonArgs& args) {
    AppConfig config = load_config(args.config_path);
    if (!args.seed_list.empty()) {
        config.seeds = args.seed_list;
    } else if (args.seeds_count > 0) {
        config.seeds.clear();
        for (int i = 0; i < args.seeds_count; ++i) config.seeds.push_back(1 + i);
    }
    if (args.scheme != "all") {
        const auto kind = parse_scheme(args.scheme);
        if (!kind) throw std::invalid_argument("--scheme must be plo, pl, po or all");
        SchemeSpec spec = config.schemes.front();
        spec.kind = *kind;
        config.schemes = {spec};
    }
    if (args.max_iters > 0) config.run.solver.max_iterations = args.max_iters;
    if (args.p_exponent < 0.0) config.run.smoothing.p_exponent = args.p_exponent;
    config.validate();
    return config;
}

int cmd_run(const CommonArgs& args, const std::string& out_dir) {
    const AppConfig config = resolve_config(args);
    const BatchSummary summary = run_and_write_artifacts(config, out_dir);

    for (const SchemeAggregate& aggregate : summary.schemes)
        std::cout << scheme_name(aggregate.scheme)
                  << ": mean final min rate " << aggregate.mean_final_min_rate
                  << " Mbit/s, mean final avg rate " << aggregate.mean_final_avg_rate
                  << " Mbit/s\n";
    if (!std::isnan(summary.min_rate_gain_plo_vs_pl_percent))
        std::cout << "PLO vs PL: min rate " << summary.min_rate_gain_plo_vs_pl_percent
                  << "%, avg rate " << summary.avg_rate_gain_plo_vs_pl_percent << "%\n";
    if (!std::isnan(summary.min_rate_gain_plo_vs_po_percent))
        std::cout << "PLO vs PO: min rate " << summary.min_rate_gain_plo_vs_po_percent
                  << "%, avg rate " << summary.avg_rate_gain_plo_vs_po_percent << "%\n";
    std::cout << "artifacts written to " << out_dir << "\n";
    return 0;
}

int cmd_gradcheck(const CommonArgs& args, double tolerance, int points) {
    if (points < 1) throw std::invalid_argument("--points must be >= 1");
    const AppConfig config = resolve_config(args);
    const Scenario scenario = generate_scenario(config.seeds.front(), config.scenario);
    const SmoothingParams& sp = config.run.smoothing;

    double worst = 0.0;
    int worst_point = -1;
    for (int i = 0; i < points; ++i) {
        const DecisionPoint x = initial_point(config.seeds.front(), i, scenario);
        const Eigen::VectorXd analytic = analytic_phase_gradient(x, scenario, sp);
        const Eigen::VectorXd fd = fd_block_gradient(x, scenario, sp, 1);
        const double scale = std::max(analytic.norm(), 1e-300);
        const double relative = (fd - analytic).norm() / scale;
        if (relative > worst) {
            worst = relative;
            worst_point = i;
        }
    }
    const bool pass = worst <= tolerance;
    std::cout << (pass ? "PASS" : "FAIL") << ": worst relative error " << worst
              << " at point " << worst_point << " (" << points
              << " points, tolerance " << tolerance << ")\n";
    return pass ? 0 : 1;
}

double alignment_bound_snr(const Scenario& scenario, const ChannelRealization& ch) {
    const RadioParams& r = scenario.radio;
    const double m = scenario.ris.total_elements();
    const double n = scenario.bs.element_count;
    const double d1 = ch.bs_ris_distance;
    const double d2 = ch.ris_user_distance[0];
    return r.tx_power * r.antenna_gain * r.reference_gain * r.reference_gain * m * m * n /
           (d1 * d1 * d2 * d2 * r.noise_power);
}

int cmd_oracle(const CommonArgs& args, double grid_deg) {
    if (grid_deg <= 0.0 || grid_deg > 120.0)
        throw std::invalid_argument("--grid-deg must be in (0, 120]");
    AppConfig config = resolve_config(args);

    // (a) single-user alignment against the closed-form SNR bound
    bool alignment_pass = true;
    {
        AppConfig single = config;
        single.scenario.user_count = 1;
        single.validate();
        for (int g = 0; g < 5; ++g) {
            const std::uint64_t seed = config.seeds.front() + g;
            const Scenario scenario = generate_scenario(seed, single.scenario);
            const RunResult run = optimize_phases_only(scenario, seed, single.run);

            const ChannelRealization ch =
                assemble_channels(scenario, run.final_point.pose());
            const Eigen::VectorXcd c = cascade(ch, run.final_point.phases);
            const RadioParams& r = scenario.radio;
            const double snr =
                r.tx_power * r.antenna_gain * std::norm(c[0]) / r.noise_power;
            const double ratio = snr / alignment_bound_snr(scenario, ch);
            std::cout << "alignment geometry " << g << ": snr ratio " << ratio << "\n";
            alignment_pass = alignment_pass && ratio >= 0.95;
        }
    }

    // (b) exhaustive two-element grid against the optimizer
    bool grid_pass = true;
    {
        AppConfig tiny = config;
        tiny.scenario.user_count = 1;
        tiny.scenario.ris_horizontal_count = 2;
        tiny.scenario.ris_vertical_count = 1;
        tiny.validate();
        const int steps = static_cast<int>(std::lround(360.0 / grid_deg));
        for (int g = 0; g < 3; ++g) {
            const std::uint64_t seed = config.seeds.front() + g;
            const Scenario scenario = generate_scenario(seed, tiny.scenario);
            const DecisionPoint reference = initial_point(seed, 0, scenario);
            const ChannelRealization ch = assemble_channels(scenario, reference.pose());

            double grid_best = 0.0;
            Eigen::VectorXd phases(2);
            for (int i = 0; i < steps; ++i) {
                for (int j = 0; j < steps; ++j) {
                    phases[0] = 2.0 * M_PI * i / steps;
                    phases[1] = 2.0 * M_PI * j / steps;
                    grid_best = std::max(
                        grid_best,
                        all_user_rates(ch, phases, scenario.radio).minCoeff());
                }
            }

            const RunResult run = optimize_phases_only(scenario, seed, tiny.run);
            const double optimizer = run.final_min_rate * 1e6;  // back to bits/s
            const double shortfall = (grid_best - optimizer) / grid_best;
            std::cout << "grid seed " << g << ": optimizer within "
                      << shortfall * 100.0 << "% of grid best\n";
            grid_pass = grid_pass && optimizer >= grid_best * 0.99;
        }
    }

    const bool pass = alignment_pass && grid_pass;
    std::cout << (pass ? "PASS" : "FAIL") << ": alignment "
              << (alignment_pass ? "ok" : "failed") << ", grid "
              << (grid_pass ? "ok" : "failed") << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS-equipped omnidirectional UAV relay: max-min rate experiments"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string out_dir = "out";
    double tolerance = 1e-5;
    int points = 20;
    double grid_deg = 1.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", args.config_path, "config JSON path");
        cmd->add_option("--seeds", args.seeds_count, "run seeds 1..N");
        cmd->add_option("--seed-list", args.seed_list, "explicit seeds")
            ->delimiter(',');
        cmd->add_option("--scheme", args.scheme, "plo, pl, po or all");
        cmd->add_option("--max-iters", args.max_iters, "solver iteration cap");
        cmd->add_option("--p-exponent", args.p_exponent, "p-norm exponent (< 0)");
    };

    CLI::App* run = app.add_subcommand("run", "run schemes and write artifacts");
    add_common(run);
    run->add_option("--out", out_dir, "output directory");

    CLI::App* gradcheck =
        app.add_subcommand("gradcheck", "analytic vs finite-difference phase gradient");
    add_common(gradcheck);
    gradcheck->add_option("--tolerance", tolerance, "max relative error");
    gradcheck->add_option("--points", points, "number of sampled feasible points");

    CLI::App* oracle =
        app.add_subcommand("oracle", "closed-form alignment and grid-search checks");
    add_common(oracle);
    oracle->add_option("--grid-deg", grid_deg, "grid resolution in degrees");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(args, out_dir);
        if (gradcheck->parsed()) return cmd_gradcheck(args, tolerance, points);
        if (oracle->parsed()) return cmd_oracle(args, grid_deg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
