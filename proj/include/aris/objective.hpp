#pragma once

#include <functional>

#include <Eigen/Dense>

#include "aris/channel.hpp"
#include "aris/scenario.hpp"
#include "aris/types.hpp"

namespace aris {

/// Smoothing and differentiation knobs for the max-min objective.
struct SmoothingParams {
    double p_exponent = -8.0;          // negative p-norm exponent
    double phase_fd_step = 1e-4;       // rad
    double position_fd_step = 1e-2;    // m
    double orientation_fd_step = 1e-4; // rad
};

/// p-norm of strictly positive values for negative p, evaluated in the
/// min-factored form min * (sum (v_i/min)^p)^(1/p). The ratios are >= 1, so
/// nothing underflows no matter the scale of the inputs.
/// Throws std::domain_error on a non-positive entry.
double negative_p_norm(const Eigen::VectorXd& values, double p);

/// Rates of every user at the decision point, bits/s.
Eigen::VectorXd compute_rates(const DecisionPoint& x, const Scenario& scenario);

/// Smoothed max-min objective to MINIMIZE: -|(R_1..R_K)|_p with p < 0.
double smoothed_objective(const DecisionPoint& x, const Scenario& scenario,
                          const SmoothingParams& sp);

/// Central finite differences with probe points clamped to [lower, upper];
/// clamping degenerates to a one-sided difference at a box face, and to a
/// zero derivative on a pinched coordinate.
Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& x, const Eigen::VectorXd& lower,
                            const Eigen::VectorXd& upper, double step);

/// Finite-difference gradient of the smoothed objective with respect to one
/// block (1 = phases, 2 = position, 3 = orientation) at the block's step.
Eigen::VectorXd fd_block_gradient(const DecisionPoint& x, const Scenario& scenario,
                                  const SmoothingParams& sp, int block);

/// Exact gradient of the smoothed objective with respect to the RIS phases.
///
/// With c_k = sum_m v_{k,m} e^{j theta_m} the chain rule gives
///   d|c_k|^2/d theta_m = -2 Im(v_{k,m} e^{j theta_m} conj(c_k)),
/// which is composed with the SNR -> rate log and the p-norm weights
/// (R_k/R_min)^(p-1) * T^(1/p-1), T = sum (R_k/R_min)^p; the leading minus
/// of the objective flips the sign once more.
Eigen::VectorXd analytic_phase_gradient(const DecisionPoint& x, const Scenario& scenario,
                                        const SmoothingParams& sp);

}  // namespace aris
