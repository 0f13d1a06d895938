#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "aris/rng.hpp"
#include "aris/solver.hpp"

using namespace aris;
using namespace aris::solver;

namespace {

/// Separable quadratic sum_i a_i (x_i - c_i)^2 over three 1-D blocks; the
/// box-constrained minimizer is the projection of c.
struct QuadraticToy {
    Eigen::Vector3d curvature{1.0, 2.0, 0.5};
    Eigen::Vector3d center{0.4, 1.8, -2.0};  // partly outside the boxes

    Problem problem() const {
        Problem p;
        p.boxes = {Box::cube(1, -1.0, 1.0), Box::cube(1, -1.0, 1.0),
                   Box::cube(1, -1.0, 1.0)};
        p.objective = [*this](const BlockVector& x) {
            double f = 0.0;
            for (int i = 0; i < 3; ++i)
                f += curvature[i] * (x[i][0] - center[i]) * (x[i][0] - center[i]);
            return f;
        };
        p.fd_steps = {1e-5, 1e-5, 1e-5};
        return p;
    }

    BlockVector solution() const {
        BlockVector s;
        for (int i = 0; i < 3; ++i) {
            Eigen::VectorXd xi(1);
            xi << std::clamp(center[i], -1.0, 1.0);
            s.push_back(xi);
        }
        return s;
    }
};

BlockVector zeros3() {
    return {Eigen::VectorXd::Zero(1), Eigen::VectorXd::Zero(1), Eigen::VectorXd::Zero(1)};
}

}  // namespace

TEST_CASE("step size schedules") {
    SolverParams params;
    params.schedule = StepSchedule::Harmonic;
    CHECK(step_size(0, params) == 1.0);
    CHECK(step_size(2, params) == 0.5);

    params.schedule = StepSchedule::Constant;
    params.gamma0 = 0.3;
    for (int l = 0; l < 10; ++l) CHECK(step_size(l, params) == 0.3);

    params.schedule = StepSchedule::Geometric;
    params.gamma0 = 1.0;
    params.geometric_ratio = 0.5;
    CHECK(step_size(0, params) == 1.0);
    CHECK(step_size(3, params) == 0.125);

    params.schedule = StepSchedule::Constant;
    params.gamma0 = 7.0;  // clamped into (0, 1]
    CHECK(step_size(0, params) == 1.0);
    for (int l = 0; l < 200; ++l) {
        params.schedule = StepSchedule::Harmonic;
        const double gamma = step_size(l, params);
        CHECK(gamma > 0.0);
        CHECK(gamma <= 1.0);
    }
}

TEST_CASE("block surrogate solutions") {
    const Box box = Box::cube(1, -1.0, 1.0);
    Eigen::VectorXd x(1), grad(1);

    x << 0.5;
    grad << 0.0;
    const Eigen::VectorXd stationary =
        solve_block_surrogate(grad, x, box, SurrogateMode::Proximal, 1.0);
    CHECK(stationary[0] == 0.5);

    grad << 1.0;
    CHECK(solve_block_surrogate(grad, x, box, SurrogateMode::Proximal, 1.0)[0] == -0.5);

    grad << -3.0;
    CHECK(solve_block_surrogate(grad, x, box, SurrogateMode::Linear, 1.0)[0] == 1.0);
    grad << 3.0;
    CHECK(solve_block_surrogate(grad, x, box, SurrogateMode::Linear, 1.0)[0] == -1.0);
    grad << 0.0;
    CHECK(solve_block_surrogate(grad, x, box, SurrogateMode::Linear, 1.0)[0] == 0.5);

    // proximal step projects onto the box
    grad << 10.0;
    CHECK(solve_block_surrogate(grad, x, box, SurrogateMode::Proximal, 1.0)[0] == -1.0);

    x << 2.0;  // infeasible input
    CHECK_THROWS_AS(solve_block_surrogate(grad, x, box, SurrogateMode::Proximal, 1.0),
                    std::invalid_argument);
}

TEST_CASE("linear surrogate lands on a vertex when no gradient entry is zero") {
    Rng rng(3);
    const Box box = Box::cube(4, -2.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::VectorXd x(4), grad(4);
        for (int i = 0; i < 4; ++i) {
            x[i] = rng.uniform(-2.0, 3.0);
            grad[i] = rng.uniform(-1.0, 1.0);
            if (grad[i] == 0.0) grad[i] = 0.5;
        }
        const Eigen::VectorXd vertex =
            solve_block_surrogate(grad, x, box, SurrogateMode::Linear, 1.0);
        for (int i = 0; i < 4; ++i)
            CHECK((vertex[i] == box.lower[i] || vertex[i] == box.upper[i]));
    }
}

TEST_CASE("one proximal step with tau equal to the curvature solves a quadratic") {
    // uniform curvature so a single tau matches every block exactly
    QuadraticToy uniform;
    uniform.curvature = {1.5, 1.5, 1.5};
    uniform.center = {0.4, 1.8, -2.0};
    const Problem p = uniform.problem();

    SolverParams params;
    params.schedule = StepSchedule::Constant;
    params.gamma0 = 1.0;
    // normalized-coordinate curvature: 2 a w^2 with box width w = 2
    params.tau = 2.0 * 1.5 * 4.0;

    const StepResult step = psca_step(zeros3(), p, params, 0);
    const BlockVector expected = uniform.solution();
    for (int i = 0; i < 3; ++i)
        CHECK(step.next[i][0] == doctest::Approx(expected[i][0]).epsilon(1e-9));
}

TEST_CASE("small steps keep the iterate close") {
    const QuadraticToy toy;
    const Problem p = toy.problem();
    SolverParams params;
    params.schedule = StepSchedule::Constant;
    params.gamma0 = 1e-9;
    const StepResult step = psca_step(zeros3(), p, params, 0);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(step.next[i][0]) < 1e-6);
}

TEST_CASE("iterates stay feasible for any gamma") {
    const QuadraticToy toy;
    const Problem p = toy.problem();
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        BlockVector x;
        for (int i = 0; i < 3; ++i) {
            Eigen::VectorXd xi(1);
            xi << rng.uniform(-1.0, 1.0);
            x.push_back(xi);
        }
        SolverParams params;
        params.schedule = StepSchedule::Constant;
        params.gamma0 = rng.uniform(0.01, 1.0);
        const StepResult step = psca_step(x, p, params, 0);
        for (int i = 0; i < 3; ++i) CHECK(p.boxes[i].contains(step.next[i]));
    }
}

TEST_CASE("psca_run converges on a box-constrained quadratic") {
    const QuadraticToy toy;
    const Problem p = toy.problem();
    SolverParams params;
    params.max_iterations = 400;
    params.tau = 4.0;

    const SolverTrace trace = psca_run(zeros3(), p, params);
    const BlockVector expected = toy.solution();
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(trace.final_point()[i][0] - expected[i][0]) < 1e-3);

    CHECK(trace.iterates.size() <= std::size_t(params.max_iterations) + 1);
    CHECK(trace.final_objective() < trace.objectives.front() - 0.1);

    // every iterate feasible, exactly
    for (const auto& iterate : trace.iterates)
        for (int i = 0; i < 3; ++i) CHECK(p.boxes[i].contains(iterate[i]));
}

TEST_CASE("psca_run is deterministic") {
    const QuadraticToy toy;
    const Problem p = toy.problem();
    SolverParams params;
    params.max_iterations = 50;
    const SolverTrace a = psca_run(zeros3(), p, params);
    const SolverTrace b = psca_run(zeros3(), p, params);
    REQUIRE(a.iterates.size() == b.iterates.size());
    for (std::size_t l = 0; l < a.iterates.size(); ++l) {
        CHECK(a.objectives[l] == b.objectives[l]);
        for (int i = 0; i < 3; ++i) CHECK(a.iterates[l][i] == b.iterates[l][i]);
    }
}

TEST_CASE("masked blocks never move") {
    const QuadraticToy toy;
    const Problem p = toy.problem();
    SolverParams params;
    params.max_iterations = 60;
    params.active_blocks = {true, false, false};

    BlockVector x0 = zeros3();
    x0[1][0] = 0.25;
    x0[2][0] = -0.75;
    const SolverTrace trace = psca_run(x0, p, params);
    for (const auto& iterate : trace.iterates) {
        CHECK(iterate[1][0] == 0.25);
        CHECK(iterate[2][0] == -0.75);
    }
    // the active block did move
    CHECK(trace.final_point()[0][0] != x0[0][0]);
}

TEST_CASE("psca_run rejects an infeasible start") {
    const QuadraticToy toy;
    const Problem p = toy.problem();
    BlockVector x0 = zeros3();
    x0[0][0] = 5.0;
    CHECK_THROWS_AS(psca_run(x0, p, SolverParams{}), std::invalid_argument);
}

TEST_CASE("stopping rule triggers on a flat objective") {
    Problem p;
    p.boxes = {Box::cube(1, -1.0, 1.0)};
    p.objective = [](const BlockVector&) { return 1.0; };
    p.fd_steps = {1e-5};
    SolverParams params;
    params.max_iterations = 500;
    params.patience = 10;
    const SolverTrace trace = psca_run({Eigen::VectorXd::Zero(1)}, p, params);
    CHECK(trace.converged);
    CHECK(trace.iterations() == 10);
}
