#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aris/objective.hpp"
#include "aris/scenario.hpp"
#include "aris/solver.hpp"
#include "aris/types.hpp"

namespace aris {

/// The three experiment schemes: PLO optimizes phases, location and
/// orientation; PL pins the orientation; PO pins the location above the
/// user barycenter.
enum class SchemeKind { Plo, Pl, Po };

std::string scheme_name(SchemeKind kind);
std::optional<SchemeKind> parse_scheme(const std::string& name);

struct SchemeSpec {
    SchemeKind kind = SchemeKind::Plo;

    /// PL only: the orientation the under-actuated baseline flies with.
    Orientation fixed_orientation{};

    /// PO only: where the pinned altitude comes from. FromPlo uses the PLO
    /// run of the same seed when available and falls back to fixed_altitude
    /// for standalone runs.
    enum class AltitudeSource { FromPlo, Fixed };
    AltitudeSource altitude_source = AltitudeSource::FromPlo;
    double fixed_altitude = 150.0;  // m
};

/// Solver configuration shared by every scheme run.
struct RunOptions {
    solver::SolverParams solver;
    SmoothingParams smoothing;
    int starts = 8;  // multi-start count; best final objective wins
    bool analytic_phase_gradient = false;
};

/// Outcome of one scheme run (the best start). Rates are in Mbit/s, the
/// unit the solver objective itself is expressed in.
struct RunResult {
    SchemeKind scheme = SchemeKind::Plo;
    std::uint64_t seed = 0;
    solver::SolverTrace trace;
    std::vector<double> min_rate_curve;  // per iterate, Mbit/s
    std::vector<double> avg_rate_curve;  // per iterate, Mbit/s
    DecisionPoint final_point;
    double final_objective = 0.0;  // Mbit/s units, minimized
    double final_min_rate = 0.0;   // Mbit/s
    double final_avg_rate = 0.0;   // Mbit/s
    int winning_start = 0;
    double wall_time_seconds = 0.0;
};

/// Rates in Mbit/s for a decision point; the unit used across schemes,
/// traces and artifacts.
Eigen::VectorXd rates_mbps(const DecisionPoint& x, const Scenario& scenario);

/// PO pinned position: user barycenter in x, y at the given altitude.
/// Throws std::invalid_argument when the altitude leaves the position box.
Vec3 po_position(const Eigen::Ref<const Eigen::Matrix3Xd>& users, double altitude,
                 const Box& position_box);

/// Initial decision point for (seed, start): phases, position and
/// orientation drawn uniformly from their boxes in a fixed order, so every
/// scheme sees the same draws on its shared blocks.
DecisionPoint initial_point(std::uint64_t seed, int start, const Scenario& scenario);

/// Runs one scheme for one seed: multi-start PSCA with the scheme's block
/// mask and pinned blocks, keeping the start with the lowest final
/// objective. `plo_altitude` feeds PO's FromPlo altitude source.
RunResult run_scheme(const SchemeSpec& spec, const Scenario& scenario,
                     std::uint64_t seed, const RunOptions& options,
                     std::optional<double> plo_altitude = std::nullopt);

/// Phase-shift-only optimization at a frozen pose (the seed's first drawn
/// pose); multi-start varies the initial phases only. Used by the
/// closed-form oracles, which compare against bounds at a fixed geometry.
RunResult optimize_phases_only(const Scenario& scenario, std::uint64_t seed,
                               const RunOptions& options);

struct SchemeAggregate {
    SchemeKind scheme = SchemeKind::Plo;
    std::vector<RunResult> runs;               // one per seed, seed order
    std::vector<double> mean_min_rate_curve;   // padded across seeds, Mbit/s
    std::vector<double> mean_avg_rate_curve;
    double mean_final_min_rate = 0.0;
    double mean_final_avg_rate = 0.0;
};

struct SeedComparison {
    std::uint64_t seed = 0;
    std::vector<double> final_min_rate;  // per scheme, spec order, Mbit/s
    std::vector<double> final_avg_rate;
};

/// Multi-seed, multi-scheme experiment. Each seed gets its own scenario;
/// PLO runs first so PO can reuse its altitude. Gains compare final mean
/// rates of the first PLO/PL/PO entries and are NaN when a scheme is absent.
struct BatchSummary {
    std::vector<SchemeAggregate> schemes;  // spec order
    std::vector<SeedComparison> per_seed;
    double min_rate_gain_plo_vs_pl_percent = 0.0;
    double avg_rate_gain_plo_vs_pl_percent = 0.0;
    double min_rate_gain_plo_vs_po_percent = 0.0;
    double avg_rate_gain_plo_vs_po_percent = 0.0;
    int seeds_where_plo_beats_pl = 0;
};

BatchSummary compare_schemes(const ScenarioConfig& scenario_config,
                             const std::vector<std::uint64_t>& seeds,
                             const std::vector<SchemeSpec>& specs,
                             const RunOptions& options);

}  // namespace aris
