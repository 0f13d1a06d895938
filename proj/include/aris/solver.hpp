#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "aris/types.hpp"

namespace aris::solver {

using BlockVector = std::vector<Eigen::VectorXd>;

enum class StepSchedule { Harmonic, Constant, Geometric };
enum class SurrogateMode { Proximal, Linear };

struct SolverParams {
    int max_iterations = 500;
    StepSchedule schedule = StepSchedule::Harmonic;
    double gamma0 = 1.0;           // base step for Constant/Geometric
    double geometric_ratio = 0.98; // per-iteration decay for Geometric
    SurrogateMode surrogate = SurrogateMode::Proximal;
    double tau = 1.0;              // proximal weight per unit-cube block
    double relative_tolerance = 1e-6;
    int patience = 10;             // consecutive stalled iterations to stop
    std::vector<bool> active_blocks;  // empty = all blocks active
};

/// Multi-block box-constrained problem. The objective is evaluated in native
/// block coordinates. A block either carries an explicit gradient callback
/// or is differentiated by clamped central differences at fd_steps[i].
struct Problem {
    std::vector<Box> boxes;
    std::function<double(const BlockVector&)> objective;
    std::vector<std::function<Eigen::VectorXd(const BlockVector&)>> gradients;
    std::vector<double> fd_steps;

    int block_count() const { return static_cast<int>(boxes.size()); }
};

/// Iteration history. objectives and iterates have one entry per iterate
/// (initial point included); gammas and block_step_norms one per step taken.
struct SolverTrace {
    std::vector<double> objectives;
    std::vector<BlockVector> iterates;
    std::vector<double> gammas;
    std::vector<std::vector<double>> block_step_norms;
    bool converged = false;

    int iterations() const { return static_cast<int>(gammas.size()); }
    const BlockVector& final_point() const { return iterates.back(); }
    double final_objective() const { return objectives.back(); }
};

/// Step-size schedule value at iteration l, clamped to (0, 1].
double step_size(int iteration, const SolverParams& params);

/// Minimizer of the per-block convex surrogate built from the gradient at
/// the current point. Proximal mode returns the box projection of
/// x - grad/tau (linearization plus (tau/2)|.-x|^2); Linear mode minimizes
/// the bare linearization, i.e. picks the box vertex selected by the
/// gradient signs, keeping coordinates with zero gradient unchanged.
Eigen::VectorXd solve_block_surrogate(const Eigen::VectorXd& grad,
                                      const Eigen::VectorXd& x, const Box& box,
                                      SurrogateMode mode, double tau);

struct StepResult {
    BlockVector next;
    double gamma = 0.0;
    std::vector<double> block_step_norms;
};

/// One PSCA iteration: every active block's surrogate is solved at the
/// shared point x (the gradient is premultiplied by the squared box widths,
/// which is exactly the proximal step in unit-cube block coordinates), then
/// the iterate moves by the convex combination x + gamma*(xhat - x).
/// Inactive blocks are copied through untouched.
StepResult psca_step(const BlockVector& x, const Problem& problem,
                     const SolverParams& params, int iteration);

/// Full PSCA loop from a feasible initial point. Stops when the relative
/// objective change stays below relative_tolerance for `patience`
/// consecutive iterations, or at max_iterations.
/// Throws std::invalid_argument when x0 is infeasible.
SolverTrace psca_run(const BlockVector& x0, const Problem& problem,
                     const SolverParams& params);

}  // namespace aris::solver
