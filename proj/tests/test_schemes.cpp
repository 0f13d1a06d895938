#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "aris/schemes.hpp"

using namespace aris;

namespace {

/// Shrunk configuration so scheme tests stay fast: 3 users, 2x2 RIS, short
/// solver runs, single start.
ScenarioConfig small_config() {
    ScenarioConfig cfg;
    cfg.user_count = 3;
    cfg.ris_horizontal_count = 2;
    cfg.ris_vertical_count = 2;
    return cfg;
}

RunOptions fast_options() {
    RunOptions options;
    options.solver.max_iterations = 60;
    options.starts = 1;
    return options;
}

}  // namespace

TEST_CASE("generate_scenario is deterministic and respects overrides") {
    const ScenarioConfig cfg = small_config();
    const Scenario a = generate_scenario(7, cfg);
    const Scenario b = generate_scenario(7, cfg);
    CHECK(a.users == b.users);
    CHECK(a.users.cols() == 3);
    for (int k = 0; k < a.user_count(); ++k) {
        CHECK(a.users(0, k) >= 0.0);
        CHECK(a.users(0, k) <= cfg.area_x);
        CHECK(a.users(1, k) >= 0.0);
        CHECK(a.users(1, k) <= cfg.area_y);
        CHECK(a.users(2, k) == 0.0);
    }
    const Scenario c = generate_scenario(8, cfg);
    CHECK(a.users != c.users);

    ScenarioConfig bad = cfg;
    bad.position_z_min = 400.0;  // above z_max
    CHECK_THROWS_AS(generate_scenario(7, bad), std::invalid_argument);
}

TEST_CASE("radio parameters are converted to linear units once") {
    const Scenario s = generate_scenario(1, small_config());
    CHECK(s.radio.reference_gain == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(s.radio.noise_power == doctest::Approx(1e-13).epsilon(1e-12));
    CHECK(s.radio.antenna_gain == doctest::Approx(std::pow(10.0, 0.8)).epsilon(1e-12));
}

TEST_CASE("initial points are deterministic, feasible, and distinct per start") {
    const Scenario s = generate_scenario(3, small_config());
    const DecisionPoint a = initial_point(3, 0, s);
    const DecisionPoint b = initial_point(3, 0, s);
    CHECK(a.phases == b.phases);
    CHECK(a.position == b.position);
    CHECK(a.orientation.vec() == b.orientation.vec());
    CHECK(s.contains(a));

    const DecisionPoint c = initial_point(3, 1, s);
    CHECK(a.phases != c.phases);
}

TEST_CASE("po_position") {
    Eigen::Matrix3Xd users(3, 2);
    users.col(0) = Vec3(0, 0, 0);
    users.col(1) = Vec3(100, 0, 0);
    Box box;
    box.lower = Vec3(0, 0, 150);
    box.upper = Vec3(1000, 1000, 300);
    CHECK(po_position(users, 150.0, box) == Vec3(50, 0, 150));

    Eigen::Matrix3Xd single(3, 1);
    single.col(0) = Vec3(12, 34, 0);
    CHECK(po_position(single, 200.0, box) == Vec3(12, 34, 200));

    CHECK_THROWS_AS(po_position(users, 100.0, box), std::invalid_argument);
    CHECK_THROWS_AS(po_position(users, 301.0, box), std::invalid_argument);
}

TEST_CASE("pl keeps its fixed orientation through the whole trace") {
    const Scenario s = generate_scenario(11, small_config());
    SchemeSpec spec;
    spec.kind = SchemeKind::Pl;
    spec.fixed_orientation = {0.1, 0.2, 0.3};
    const RunResult run = run_scheme(spec, s, 11, fast_options());
    for (const auto& iterate : run.trace.iterates) {
        CHECK(iterate[2][0] == 0.1);
        CHECK(iterate[2][1] == 0.2);
        CHECK(iterate[2][2] == 0.3);
    }
}

TEST_CASE("po keeps the barycenter position through the whole trace") {
    const Scenario s = generate_scenario(12, small_config());
    SchemeSpec spec;
    spec.kind = SchemeKind::Po;
    spec.altitude_source = SchemeSpec::AltitudeSource::Fixed;
    spec.fixed_altitude = 180.0;
    const RunResult run = run_scheme(spec, s, 12, fast_options());
    const Vec3 expected = po_position(s.users, 180.0, s.position_box);
    for (const auto& iterate : run.trace.iterates) {
        CHECK(iterate[1][0] == expected.x());
        CHECK(iterate[1][1] == expected.y());
        CHECK(iterate[1][2] == expected.z());
    }
}

TEST_CASE("po reuses the plo altitude when available") {
    const Scenario s = generate_scenario(13, small_config());
    SchemeSpec plo;
    plo.kind = SchemeKind::Plo;
    const RunResult plo_run = run_scheme(plo, s, 13, fast_options());

    SchemeSpec po;
    po.kind = SchemeKind::Po;
    const RunResult po_run =
        run_scheme(po, s, 13, fast_options(), plo_run.final_point.position.z());
    CHECK(po_run.final_point.position.z() == plo_run.final_point.position.z());
}

TEST_CASE("plo improves the minimum rate from its start") {
    const Scenario s = generate_scenario(14, small_config());
    SchemeSpec spec;
    spec.kind = SchemeKind::Plo;
    RunOptions options = fast_options();
    options.solver.max_iterations = 150;
    const RunResult run = run_scheme(spec, s, 14, options);
    CHECK(run.final_min_rate >= run.min_rate_curve.front());
}

TEST_CASE("reported finals equal a fresh evaluation of the final point") {
    const Scenario s = generate_scenario(15, small_config());
    SchemeSpec spec;
    spec.kind = SchemeKind::Plo;
    const RunResult run = run_scheme(spec, s, 15, fast_options());
    const Eigen::VectorXd rates = rates_mbps(run.final_point, s);
    CHECK(run.final_min_rate == doctest::Approx(rates.minCoeff()).epsilon(1e-9));
    CHECK(run.final_avg_rate == doctest::Approx(rates.mean()).epsilon(1e-9));
    CHECK(run.final_objective ==
          doctest::Approx(-negative_p_norm(rates, -8.0)).epsilon(1e-9));
}

TEST_CASE("multi-start picks the best final objective") {
    const Scenario s = generate_scenario(16, small_config());
    SchemeSpec spec;
    spec.kind = SchemeKind::Plo;
    RunOptions one = fast_options();
    RunOptions four = fast_options();
    four.starts = 4;
    const RunResult best_of_one = run_scheme(spec, s, 16, one);
    const RunResult best_of_four = run_scheme(spec, s, 16, four);
    CHECK(best_of_four.final_objective <= best_of_one.final_objective);
    CHECK(best_of_four.winning_start >= 0);
    CHECK(best_of_four.winning_start < 4);
}

TEST_CASE("compare_schemes aggregates, orders and isolates seeds") {
    const ScenarioConfig cfg = small_config();
    const RunOptions options = fast_options();
    const std::vector<SchemeSpec> specs = {
        {SchemeKind::Plo}, {SchemeKind::Pl}, {SchemeKind::Po}};

    const BatchSummary batch =
        compare_schemes(cfg, {21, 22}, specs, options);
    REQUIRE(batch.schemes.size() == 3);
    REQUIRE(batch.per_seed.size() == 2);
    for (const auto& aggregate : batch.schemes) {
        CHECK(aggregate.runs.size() == 2);
        CHECK(!aggregate.mean_min_rate_curve.empty());
    }
    CHECK(std::isfinite(batch.min_rate_gain_plo_vs_pl_percent));
    CHECK(std::isfinite(batch.avg_rate_gain_plo_vs_po_percent));

    // seed isolation: seed 22 results do not depend on the batch around them
    const BatchSummary alone = compare_schemes(cfg, {22}, specs, options);
    CHECK(alone.schemes[0].runs[0].final_objective ==
          batch.schemes[0].runs[1].final_objective);
    CHECK(alone.schemes[2].runs[0].final_point.position ==
          batch.schemes[2].runs[1].final_point.position);

    // single scheme, single seed: the aggregate is that run's curve
    const BatchSummary solo =
        compare_schemes(cfg, {21}, {{SchemeKind::Plo}}, options);
    CHECK(solo.schemes[0].mean_min_rate_curve == solo.schemes[0].runs[0].min_rate_curve);
    CHECK(std::isnan(solo.min_rate_gain_plo_vs_pl_percent));

    // duplicated seeds: the mean curve equals the single-seed curve
    const BatchSummary doubled =
        compare_schemes(cfg, {21, 21}, {{SchemeKind::Plo}}, options);
    REQUIRE(doubled.schemes[0].mean_min_rate_curve.size() ==
            solo.schemes[0].mean_min_rate_curve.size());
    for (std::size_t i = 0; i < doubled.schemes[0].mean_min_rate_curve.size(); ++i)
        CHECK(doubled.schemes[0].mean_min_rate_curve[i] ==
              doctest::Approx(solo.schemes[0].mean_min_rate_curve[i]).epsilon(1e-12));
}
