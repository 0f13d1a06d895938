#include "aris/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "aris/objective.hpp"

namespace aris::solver {

namespace {

bool block_active(const SolverParams& params, int i) {
    return params.active_blocks.empty() || params.active_blocks.at(i);
}

Eigen::VectorXd block_gradient(const Problem& problem, const BlockVector& x, int i) {
    if (i < static_cast<int>(problem.gradients.size()) && problem.gradients[i])
        return problem.gradients[i](x);
    const double step = i < static_cast<int>(problem.fd_steps.size())
                            ? problem.fd_steps[i]
                            : 1e-6;
    BlockVector probe = x;
    auto f = [&](const Eigen::VectorXd& xi) {
        probe[i] = xi;
        return problem.objective(probe);
    };
    return fd_gradient(f, x[i], problem.boxes[i].lower, problem.boxes[i].upper, step);
}

}  // namespace

double step_size(int iteration, const SolverParams& params) {
    double gamma = 1.0;
    switch (params.schedule) {
        case StepSchedule::Harmonic: gamma = 2.0 / (iteration + 2.0); break;
        case StepSchedule::Constant: gamma = params.gamma0; break;
        case StepSchedule::Geometric:
            gamma = params.gamma0 * std::pow(params.geometric_ratio, iteration);
            break;
    }
    return std::clamp(gamma, std::numeric_limits<double>::min(), 1.0);
}

Eigen::VectorXd solve_block_surrogate(const Eigen::VectorXd& grad,
                                      const Eigen::VectorXd& x, const Box& box,
                                      SurrogateMode mode, double tau) {
    if (!box.contains(x))
        throw std::invalid_argument("solve_block_surrogate: point outside its box");
    if (mode == SurrogateMode::Proximal) return box.clamp(x - grad / tau);

    Eigen::VectorXd vertex = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (grad[i] > 0.0) vertex[i] = box.lower[i];
        else if (grad[i] < 0.0) vertex[i] = box.upper[i];
    }
    return vertex;
}

StepResult psca_step(const BlockVector& x, const Problem& problem,
                     const SolverParams& params, int iteration) {
    StepResult result;
    result.gamma = step_size(iteration, params);
    result.next.resize(problem.block_count());
    result.block_step_norms.assign(problem.block_count(), 0.0);

    for (int i = 0; i < problem.block_count(); ++i) {
        if (!block_active(params, i)) {
            result.next[i] = x[i];
            continue;
        }
        const Box& box = problem.boxes[i];
        // Squared widths turn the native gradient into the unit-cube proximal
        // step, so one tau spans blocks measured in radians and in meters.
        const Eigen::VectorXd scaled =
            block_gradient(problem, x, i).cwiseProduct(box.width().cwiseAbs2());
        const Eigen::VectorXd xhat =
            solve_block_surrogate(scaled, x[i], box, params.surrogate, params.tau);
        result.next[i] = box.clamp(x[i] + result.gamma * (xhat - x[i]));
        result.block_step_norms[i] = (result.next[i] - x[i]).norm();
    }
    return result;
}

SolverTrace psca_run(const BlockVector& x0, const Problem& problem,
                     const SolverParams& params) {
    if (static_cast<int>(x0.size()) != problem.block_count())
        throw std::invalid_argument("psca_run: block count mismatch");
    for (int i = 0; i < problem.block_count(); ++i)
        if (!problem.boxes[i].contains(x0[i]))
            throw std::invalid_argument("psca_run: infeasible initial point");

    SolverTrace trace;
    trace.iterates.push_back(x0);
    trace.objectives.push_back(problem.objective(x0));

    int stalled = 0;
    for (int l = 0; l < params.max_iterations; ++l) {
        StepResult step = psca_step(trace.iterates.back(), problem, params, l);
        const double next_objective = problem.objective(step.next);
        const double previous = trace.objectives.back();

        trace.iterates.push_back(std::move(step.next));
        trace.objectives.push_back(next_objective);
        trace.gammas.push_back(step.gamma);
        trace.block_step_norms.push_back(std::move(step.block_step_norms));

        if (std::abs(next_objective - previous) <=
            params.relative_tolerance * std::abs(previous)) {
            if (++stalled >= params.patience) {
                trace.converged = true;
                break;
            }
        } else {
            stalled = 0;
        }
    }
    return trace;
}

}  // namespace aris::solver
