#include "aris/schemes.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "aris/geometry.hpp"
#include "aris/rng.hpp"

namespace aris {

namespace {

constexpr std::uint64_t kInitStream = 0x696e6974ULL;  // "init"
constexpr double kBpsToMbps = 1e-6;

DecisionPoint from_blocks(const solver::BlockVector& blocks) {
    DecisionPoint x;
    x.phases = blocks[0];
    x.position = blocks[1];
    x.orientation = Orientation::from_vec(blocks[2]);
    return x;
}

solver::BlockVector to_blocks(const DecisionPoint& x) {
    return {x.phases, x.position, x.orientation.vec()};
}

solver::Problem make_problem(const Scenario& scenario, const RunOptions& options) {
    solver::Problem problem;
    problem.boxes = {scenario.phase_box(), scenario.position_box,
                     scenario.orientation_box};
    const SmoothingParams sp = options.smoothing;
    problem.objective = [&scenario, sp](const solver::BlockVector& blocks) {
        return -negative_p_norm(rates_mbps(from_blocks(blocks), scenario),
                                sp.p_exponent);
    };
    problem.fd_steps = {sp.phase_fd_step, sp.position_fd_step, sp.orientation_fd_step};
    problem.gradients.resize(3);
    if (options.analytic_phase_gradient) {
        problem.gradients[0] = [&scenario, sp](const solver::BlockVector& blocks) {
            return (kBpsToMbps *
                    analytic_phase_gradient(from_blocks(blocks), scenario, sp))
                .eval();
        };
    }
    return problem;
}

std::vector<bool> scheme_mask(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::Plo: return {true, true, true};
        case SchemeKind::Pl: return {true, true, false};
        case SchemeKind::Po: return {true, false, true};
    }
    throw std::logic_error("unknown scheme");
}

std::vector<double> padded_mean(const std::vector<const std::vector<double>*>& curves) {
    std::size_t len = 0;
    for (const auto* c : curves) len = std::max(len, c->size());
    std::vector<double> mean(len, 0.0);
    for (const auto* c : curves)
        for (std::size_t i = 0; i < len; ++i)
            mean[i] += (i < c->size() ? (*c)[i] : c->back()) / curves.size();
    return mean;
}

double gain_percent(double value, double baseline) {
    return 100.0 * (value - baseline) / baseline;
}

}  // namespace

std::string scheme_name(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::Plo: return "plo";
        case SchemeKind::Pl: return "pl";
        case SchemeKind::Po: return "po";
    }
    throw std::logic_error("unknown scheme");
}

std::optional<SchemeKind> parse_scheme(const std::string& name) {
    if (name == "plo") return SchemeKind::Plo;
    if (name == "pl") return SchemeKind::Pl;
    if (name == "po") return SchemeKind::Po;
    return std::nullopt;
}

Eigen::VectorXd rates_mbps(const DecisionPoint& x, const Scenario& scenario) {
    return kBpsToMbps * compute_rates(x, scenario);
}

Vec3 po_position(const Eigen::Ref<const Eigen::Matrix3Xd>& users, double altitude,
                 const Box& position_box) {
    if (altitude < position_box.lower[2] || altitude > position_box.upper[2])
        throw std::invalid_argument("po_position: altitude outside the position box");
    const Vec3 center = geom::barycenter(users);
    return {center.x(), center.y(), altitude};
}

DecisionPoint initial_point(std::uint64_t seed, int start, const Scenario& scenario) {
    Rng rng(derive_stream(seed, {kInitStream, static_cast<std::uint64_t>(start)}));
    DecisionPoint x;
    const Box phases = scenario.phase_box();
    x.phases = rng.uniform_vector(phases.lower, phases.upper);
    x.position = rng.uniform_vector(scenario.position_box.lower,
                                    scenario.position_box.upper);
    x.orientation = Orientation::from_vec(rng.uniform_vector(
        scenario.orientation_box.lower, scenario.orientation_box.upper));
    return x;
}

namespace {

/// Multi-start PSCA core: solves from each start's initial point (adjusted
/// by `pin`) and keeps the lowest final objective.
template <typename PinFn>
RunResult multi_start_solve(const Scenario& scenario, std::uint64_t seed,
                            const RunOptions& options, std::vector<bool> mask,
                            SchemeKind kind, PinFn&& pin) {
    if (options.starts < 1)
        throw std::invalid_argument("run_scheme: starts must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    const solver::Problem problem = make_problem(scenario, options);
    solver::SolverParams params = options.solver;
    params.active_blocks = std::move(mask);

    solver::SolverTrace best;
    int best_start = -1;
    for (int start = 0; start < options.starts; ++start) {
        DecisionPoint x0 = initial_point(seed, start, scenario);
        pin(x0, start);
        solver::SolverTrace trace = psca_run(to_blocks(x0), problem, params);
        if (best_start < 0 || trace.final_objective() < best.final_objective()) {
            best = std::move(trace);
            best_start = start;
        }
    }

    RunResult result;
    result.scheme = kind;
    result.seed = seed;
    result.winning_start = best_start;
    result.min_rate_curve.reserve(best.iterates.size());
    result.avg_rate_curve.reserve(best.iterates.size());
    for (const auto& iterate : best.iterates) {
        const Eigen::VectorXd rates = rates_mbps(from_blocks(iterate), scenario);
        result.min_rate_curve.push_back(rates.minCoeff());
        result.avg_rate_curve.push_back(rates.mean());
    }
    result.final_point = from_blocks(best.final_point());
    result.final_objective = best.final_objective();
    result.final_min_rate = result.min_rate_curve.back();
    result.final_avg_rate = result.avg_rate_curve.back();
    result.trace = std::move(best);
    result.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace

RunResult run_scheme(const SchemeSpec& spec, const Scenario& scenario,
                     std::uint64_t seed, const RunOptions& options,
                     std::optional<double> plo_altitude) {
    std::optional<Vec3> pinned_position;
    if (spec.kind == SchemeKind::Po) {
        const double altitude =
            (spec.altitude_source == SchemeSpec::AltitudeSource::FromPlo && plo_altitude)
                ? *plo_altitude
                : spec.fixed_altitude;
        pinned_position = po_position(scenario.users, altitude, scenario.position_box);
    }
    return multi_start_solve(scenario, seed, options, scheme_mask(spec.kind), spec.kind,
                             [&](DecisionPoint& x0, int) {
                                 if (spec.kind == SchemeKind::Pl)
                                     x0.orientation = spec.fixed_orientation;
                                 if (pinned_position) x0.position = *pinned_position;
                             });
}

RunResult optimize_phases_only(const Scenario& scenario, std::uint64_t seed,
                               const RunOptions& options) {
    const Pose pose = initial_point(seed, 0, scenario).pose();
    return multi_start_solve(scenario, seed, options, {true, false, false},
                             SchemeKind::Plo, [&](DecisionPoint& x0, int) {
                                 x0.position = pose.position;
                                 x0.orientation = pose.orientation;
                             });
}

BatchSummary compare_schemes(const ScenarioConfig& scenario_config,
                             const std::vector<std::uint64_t>& seeds,
                             const std::vector<SchemeSpec>& specs,
                             const RunOptions& options) {
    if (seeds.empty()) throw std::invalid_argument("compare_schemes: need >= 1 seed");

    BatchSummary summary;
    summary.schemes.resize(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i)
        summary.schemes[i].scheme = specs[i].kind;

    for (std::uint64_t seed : seeds) {
        const Scenario scenario = generate_scenario(seed, scenario_config);

        // PLO first: PO may reuse its optimal altitude for this seed.
        std::optional<double> plo_altitude;
        std::vector<RunResult> seed_runs(specs.size());
        std::vector<bool> done(specs.size(), false);
        for (std::size_t i = 0; i < specs.size(); ++i) {
            if (specs[i].kind != SchemeKind::Plo) continue;
            seed_runs[i] = run_scheme(specs[i], scenario, seed, options);
            if (!plo_altitude) plo_altitude = seed_runs[i].final_point.position.z();
            done[i] = true;
        }
        for (std::size_t i = 0; i < specs.size(); ++i) {
            if (done[i]) continue;
            seed_runs[i] = run_scheme(specs[i], scenario, seed, options, plo_altitude);
        }

        SeedComparison row;
        row.seed = seed;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            row.final_min_rate.push_back(seed_runs[i].final_min_rate);
            row.final_avg_rate.push_back(seed_runs[i].final_avg_rate);
            summary.schemes[i].runs.push_back(std::move(seed_runs[i]));
        }
        summary.per_seed.push_back(std::move(row));
    }

    for (auto& aggregate : summary.schemes) {
        std::vector<const std::vector<double>*> min_curves, avg_curves;
        double min_sum = 0.0, avg_sum = 0.0;
        for (const RunResult& run : aggregate.runs) {
            min_curves.push_back(&run.min_rate_curve);
            avg_curves.push_back(&run.avg_rate_curve);
            min_sum += run.final_min_rate;
            avg_sum += run.final_avg_rate;
        }
        aggregate.mean_min_rate_curve = padded_mean(min_curves);
        aggregate.mean_avg_rate_curve = padded_mean(avg_curves);
        aggregate.mean_final_min_rate = min_sum / aggregate.runs.size();
        aggregate.mean_final_avg_rate = avg_sum / aggregate.runs.size();
    }

    const auto find = [&](SchemeKind kind) -> const SchemeAggregate* {
        for (const auto& a : summary.schemes)
            if (a.scheme == kind) return &a;
        return nullptr;
    };
    const SchemeAggregate* plo = find(SchemeKind::Plo);
    const SchemeAggregate* pl = find(SchemeKind::Pl);
    const SchemeAggregate* po = find(SchemeKind::Po);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    summary.min_rate_gain_plo_vs_pl_percent =
        (plo && pl) ? gain_percent(plo->mean_final_min_rate, pl->mean_final_min_rate) : nan;
    summary.avg_rate_gain_plo_vs_pl_percent =
        (plo && pl) ? gain_percent(plo->mean_final_avg_rate, pl->mean_final_avg_rate) : nan;
    summary.min_rate_gain_plo_vs_po_percent =
        (plo && po) ? gain_percent(plo->mean_final_min_rate, po->mean_final_min_rate) : nan;
    summary.avg_rate_gain_plo_vs_po_percent =
        (plo && po) ? gain_percent(plo->mean_final_avg_rate, po->mean_final_avg_rate) : nan;

    if (plo && pl) {
        for (std::size_t s = 0; s < seeds.size(); ++s) {
            if (plo->runs[s].final_min_rate >= pl->runs[s].final_min_rate)
                ++summary.seeds_where_plo_beats_pl;
        }
    }
    return summary;
}

}  // namespace aris
