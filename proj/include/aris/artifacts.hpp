#pragma once

#include <string>

#include <json.hpp>

#include "aris/config.hpp"
#include "aris/schemes.hpp"

namespace aris {

/// Shortest-faithful decimal rendering used by every CSV column: '.' decimal
/// separator, no grouping, 12 significant digits.
std::string format_double(double value);

/// Per-iteration records, one row per (scheme, seed, iteration), sorted in
/// that order. Columns:
///   scheme,seed,iteration,objective,min_rate_mbps,avg_rate_mbps,gamma,
///   x_m,y_m,z_m,roll_rad,pitch_rad,yaw_rad
/// The gamma column holds the schedule value at the row's iteration.
std::string traces_csv(const BatchSummary& summary, const solver::SolverParams& params);

/// Final pose and rates per run, orientation in degrees (report boundary).
/// Columns: scheme,seed,iterations,winning_start,objective,min_rate_mbps,
///          avg_rate_mbps,x_m,y_m,z_m,roll_deg,pitch_deg,yaw_deg
std::string finals_csv(const BatchSummary& summary);

/// Aggregate curves, final means, scheme gains and the per-seed table.
nlohmann::json summary_json(const BatchSummary& summary);

/// Resolved config snapshot plus provenance: tool version, seeds, wall
/// times, output inventory. Together with the same build this reproduces
/// traces.csv byte for byte.
nlohmann::json manifest_json(const AppConfig& config, const BatchSummary& summary);

/// Runs the whole experiment described by the config and writes traces.csv,
/// finals.csv, summary.json and manifest.json into out_dir (created if
/// missing). Returns the summary for further inspection.
BatchSummary run_and_write_artifacts(const AppConfig& config, const std::string& out_dir);

}  // namespace aris
