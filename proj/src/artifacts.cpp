#include "aris/artifacts.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aris {

namespace {

constexpr double kRadToDeg = 180.0 / M_PI;

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string traces_csv(const BatchSummary& summary, const solver::SolverParams& params) {
    std::ostringstream out;
    out << "scheme,seed,iteration,objective,min_rate_mbps,avg_rate_mbps,gamma,"
           "x_m,y_m,z_m,roll_rad,pitch_rad,yaw_rad\n";
    for (const SchemeAggregate& aggregate : summary.schemes) {
        for (const RunResult& run : aggregate.runs) {
            const auto& trace = run.trace;
            for (std::size_t l = 0; l < trace.iterates.size(); ++l) {
                const auto& blocks = trace.iterates[l];
                const double gamma = l < trace.gammas.size()
                                         ? trace.gammas[l]
                                         : solver::step_size(static_cast<int>(l), params);
                out << scheme_name(run.scheme) << ',' << run.seed << ',' << l << ','
                    << format_double(trace.objectives[l]) << ','
                    << format_double(run.min_rate_curve[l]) << ','
                    << format_double(run.avg_rate_curve[l]) << ','
                    << format_double(gamma) << ',' << format_double(blocks[1][0]) << ','
                    << format_double(blocks[1][1]) << ',' << format_double(blocks[1][2])
                    << ',' << format_double(blocks[2][0]) << ','
                    << format_double(blocks[2][1]) << ',' << format_double(blocks[2][2])
                    << '\n';
            }
        }
    }
    return out.str();
}

std::string finals_csv(const BatchSummary& summary) {
    std::ostringstream out;
    out << "scheme,seed,iterations,winning_start,objective,min_rate_mbps,avg_rate_mbps,"
           "x_m,y_m,z_m,roll_deg,pitch_deg,yaw_deg\n";
    for (const SchemeAggregate& aggregate : summary.schemes) {
        for (const RunResult& run : aggregate.runs) {
            const DecisionPoint& x = run.final_point;
            out << scheme_name(run.scheme) << ',' << run.seed << ','
                << run.trace.iterations() << ',' << run.winning_start << ','
                << format_double(run.final_objective) << ','
                << format_double(run.final_min_rate) << ','
                << format_double(run.final_avg_rate) << ','
                << format_double(x.position.x()) << ',' << format_double(x.position.y())
                << ',' << format_double(x.position.z()) << ','
                << format_double(x.orientation.roll * kRadToDeg) << ','
                << format_double(x.orientation.pitch * kRadToDeg) << ','
                << format_double(x.orientation.yaw * kRadToDeg) << '\n';
        }
    }
    return out.str();
}

nlohmann::json summary_json(const BatchSummary& summary) {
    nlohmann::json schemes = nlohmann::json::object();
    for (const SchemeAggregate& aggregate : summary.schemes) {
        schemes[scheme_name(aggregate.scheme)] = {
            {"mean_final_min_rate_mbps", aggregate.mean_final_min_rate},
            {"mean_final_avg_rate_mbps", aggregate.mean_final_avg_rate},
            {"mean_min_rate_curve_mbps", aggregate.mean_min_rate_curve},
            {"mean_avg_rate_curve_mbps", aggregate.mean_avg_rate_curve},
        };
    }

    nlohmann::json per_seed = nlohmann::json::array();
    for (std::size_t s = 0; s < summary.per_seed.size(); ++s) {
        const SeedComparison& row = summary.per_seed[s];
        nlohmann::json entry{{"seed", row.seed}};
        for (std::size_t i = 0; i < summary.schemes.size(); ++i) {
            const std::string name = scheme_name(summary.schemes[i].scheme);
            entry[name + "_min_rate_mbps"] = row.final_min_rate[i];
            entry[name + "_avg_rate_mbps"] = row.final_avg_rate[i];
        }
        per_seed.push_back(std::move(entry));
    }

    auto gain = [](double value) -> nlohmann::json {
        if (std::isnan(value)) return nullptr;
        return value;
    };
    return nlohmann::json{
        {"schemes", std::move(schemes)},
        {"gains_percent",
         {{"min_rate_plo_vs_pl", gain(summary.min_rate_gain_plo_vs_pl_percent)},
          {"avg_rate_plo_vs_pl", gain(summary.avg_rate_gain_plo_vs_pl_percent)},
          {"min_rate_plo_vs_po", gain(summary.min_rate_gain_plo_vs_po_percent)},
          {"avg_rate_plo_vs_po", gain(summary.avg_rate_gain_plo_vs_po_percent)}}},
        {"seeds_where_plo_beats_pl", summary.seeds_where_plo_beats_pl},
        {"per_seed", std::move(per_seed)}};
}

nlohmann::json manifest_json(const AppConfig& config, const BatchSummary& summary) {
    nlohmann::json wall_times = nlohmann::json::object();
    for (const SchemeAggregate& aggregate : summary.schemes)
        for (const RunResult& run : aggregate.runs)
            wall_times[scheme_name(run.scheme) + ":" + std::to_string(run.seed)] =
                run.wall_time_seconds;

    return nlohmann::json{
        {"tool", kToolName},
        {"version", kToolVersion},
        {"config", config_to_json(config)},
        {"seeds", config.seeds},
        {"wall_times_s", std::move(wall_times)},
        {"outputs", {"traces.csv", "finals.csv", "summary.json", "manifest.json"}}};
}

BatchSummary run_and_write_artifacts(const AppConfig& config, const std::string& out_dir) {
    config.validate();
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    BatchSummary summary =
        compare_schemes(config.scenario, config.seeds, config.schemes, config.run);

    write_file(dir / "traces.csv", traces_csv(summary, config.run.solver));
    write_file(dir / "finals.csv", finals_csv(summary));
    write_file(dir / "summary.json", summary_json(summary).dump(2) + "\n");
    write_file(dir / "manifest.json", manifest_json(config, summary).dump(2) + "\n");
    return summary;
}

}  // namespace aris
