#include "aris/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace aris {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("config: " + what);
}

/// Fetches fields with type checking and rejects unknown keys, so typos
/// never silently fall back to defaults.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j.is_object()) fail(path_ + " must be an object");
    }
    ~ObjectReader() = default;

    template <typename T>
    void get(const char* key, T& out) {
        seen_.insert(key);
        if (!j_.contains(key)) return;
        try {
            out = j_.at(key).get<T>();
        } catch (const json::exception&) {
            fail(path_ + "." + key + " has the wrong type");
        }
    }

    bool has(const char* key) {
        seen_.insert(key);
        return j_.contains(key);
    }

    const json& raw(const char* key) {
        seen_.insert(key);
        return j_.at(key);
    }

    void finish() const {
        for (const auto& [key, value] : j_.items())
            if (!seen_.count(key)) fail(path_ + "." + key + " is not a known setting");
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

void read_interval(const json& j, const std::string& path, double& lo, double& hi) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(path + " must be a [low, high] pair");
    lo = j[0].get<double>();
    hi = j[1].get<double>();
}

ScenarioConfig read_scenario(const json& j) {
    ScenarioConfig s;
    ObjectReader r(j, "scenario");
    r.get("area_x_m", s.area_x);
    r.get("area_y_m", s.area_y);
    r.get("user_count", s.user_count);
    if (r.has("bs")) {
        ObjectReader b(r.raw("bs"), "scenario.bs");
        b.get("x_m", s.bs_x);
        b.get("y_m", s.bs_y);
        b.get("altitude_m", s.bs_altitude);
        b.get("element_count", s.bs_element_count);
        b.get("horizontal_width_m", s.bs_horizontal_width);
        b.get("vertical_spacing_m", s.bs_vertical_spacing);
        b.finish();
    }
    if (r.has("ris")) {
        ObjectReader b(r.raw("ris"), "scenario.ris");
        b.get("horizontal_count", s.ris_horizontal_count);
        b.get("vertical_count", s.ris_vertical_count);
        b.get("horizontal_spacing_m", s.ris_horizontal_spacing);
        b.get("vertical_spacing_m", s.ris_vertical_spacing);
        b.finish();
    }
    if (r.has("radio")) {
        ObjectReader b(r.raw("radio"), "scenario.radio");
        b.get("wavelength_m", s.wavelength);
        b.get("tx_power_w", s.tx_power);
        b.get("antenna_gain_db", s.antenna_gain_db);
        b.get("reference_gain_db", s.reference_gain_db);
        b.get("noise_power_dbm", s.noise_power_dbm);
        b.get("bandwidth_hz", s.bandwidth);
        b.finish();
    }
    if (r.has("position_box_m")) {
        ObjectReader b(r.raw("position_box_m"), "scenario.position_box_m");
        if (b.has("x")) read_interval(b.raw("x"), "position_box_m.x", s.position_x_min, s.position_x_max);
        if (b.has("y")) read_interval(b.raw("y"), "position_box_m.y", s.position_y_min, s.position_y_max);
        if (b.has("z")) read_interval(b.raw("z"), "position_box_m.z", s.position_z_min, s.position_z_max);
        b.finish();
    }
    if (r.has("orientation_box_rad")) {
        ObjectReader b(r.raw("orientation_box_rad"), "scenario.orientation_box_rad");
        if (b.has("roll")) read_interval(b.raw("roll"), "orientation_box_rad.roll", s.roll_min, s.roll_max);
        if (b.has("pitch")) read_interval(b.raw("pitch"), "orientation_box_rad.pitch", s.pitch_min, s.pitch_max);
        if (b.has("yaw")) read_interval(b.raw("yaw"), "orientation_box_rad.yaw", s.yaw_min, s.yaw_max);
        b.finish();
    }
    r.finish();
    return s;
}

solver::SolverParams read_solver(const json& j, int& starts, bool& analytic) {
    solver::SolverParams p;
    ObjectReader r(j, "solver");
    r.get("max_iterations", p.max_iterations);
    if (r.has("schedule")) {
        const std::string name = r.raw("schedule").get<std::string>();
        if (name == "harmonic") p.schedule = solver::StepSchedule::Harmonic;
        else if (name == "constant") p.schedule = solver::StepSchedule::Constant;
        else if (name == "geometric") p.schedule = solver::StepSchedule::Geometric;
        else fail("solver.schedule must be harmonic, constant or geometric");
    }
    r.get("gamma0", p.gamma0);
    r.get("geometric_ratio", p.geometric_ratio);
    if (r.has("surrogate")) {
        const std::string name = r.raw("surrogate").get<std::string>();
        if (name == "proximal") p.surrogate = solver::SurrogateMode::Proximal;
        else if (name == "linear") p.surrogate = solver::SurrogateMode::Linear;
        else fail("solver.surrogate must be proximal or linear");
    }
    r.get("tau", p.tau);
    r.get("relative_tolerance", p.relative_tolerance);
    r.get("patience", p.patience);
    r.get("starts", starts);
    if (r.has("phase_gradient")) {
        const std::string name = r.raw("phase_gradient").get<std::string>();
        if (name == "fd") analytic = false;
        else if (name == "analytic") analytic = true;
        else fail("solver.phase_gradient must be fd or analytic");
    }
    r.finish();
    return p;
}

SmoothingParams read_smoothing(const json& j) {
    SmoothingParams sp;
    ObjectReader r(j, "smoothing");
    r.get("p_exponent", sp.p_exponent);
    r.get("phase_fd_step_rad", sp.phase_fd_step);
    r.get("position_fd_step_m", sp.position_fd_step);
    r.get("orientation_fd_step_rad", sp.orientation_fd_step);
    r.finish();
    return sp;
}

}  // namespace

void AppConfig::validate() const {
    scenario.validate();
    if (seeds.empty()) fail("at least one seed is required");
    if (schemes.empty()) fail("at least one scheme is required");
    if (run.starts < 1) fail("solver.starts must be >= 1");
    if (run.solver.max_iterations < 1) fail("solver.max_iterations must be >= 1");
    if (run.solver.gamma0 <= 0.0 || run.solver.gamma0 > 1.0)
        fail("solver.gamma0 must be in (0, 1]");
    if (run.solver.geometric_ratio <= 0.0 || run.solver.geometric_ratio > 1.0)
        fail("solver.geometric_ratio must be in (0, 1]");
    if (run.solver.tau <= 0.0) fail("solver.tau must be positive");
    if (run.solver.patience < 1) fail("solver.patience must be >= 1");
    if (run.solver.relative_tolerance < 0.0)
        fail("solver.relative_tolerance must be non-negative");
    if (run.smoothing.p_exponent >= 0.0) fail("smoothing.p_exponent must be negative");
    if (run.smoothing.phase_fd_step <= 0.0 || run.smoothing.position_fd_step <= 0.0 ||
        run.smoothing.orientation_fd_step <= 0.0)
        fail("smoothing fd steps must be positive");
    for (const SchemeSpec& spec : schemes) {
        if (spec.kind == SchemeKind::Po && spec.fixed_altitude < scenario.position_z_min)
            fail("po_altitude.fixed_value_m below the position box");
        if (spec.kind == SchemeKind::Po && spec.fixed_altitude > scenario.position_z_max)
            fail("po_altitude.fixed_value_m above the position box");
    }
}

AppConfig config_from_json(const nlohmann::json& j) {
    AppConfig config;
    ObjectReader r(j, "config");
    if (r.has("scenario")) config.scenario = read_scenario(r.raw("scenario"));
    if (r.has("solver"))
        config.run.solver = read_solver(r.raw("solver"), config.run.starts,
                                        config.run.analytic_phase_gradient);
    if (r.has("smoothing")) config.run.smoothing = read_smoothing(r.raw("smoothing"));

    Orientation pl_orientation{};
    if (r.has("pl_fixed_orientation_rad")) {
        const json& o = r.raw("pl_fixed_orientation_rad");
        if (!o.is_array() || o.size() != 3) fail("pl_fixed_orientation_rad must have 3 entries");
        pl_orientation = {o[0].get<double>(), o[1].get<double>(), o[2].get<double>()};
    }
    SchemeSpec::AltitudeSource source = SchemeSpec::AltitudeSource::FromPlo;
    double fixed_altitude = 150.0;
    if (r.has("po_altitude")) {
        ObjectReader b(r.raw("po_altitude"), "po_altitude");
        if (b.has("source")) {
            const std::string name = b.raw("source").get<std::string>();
            if (name == "from_plo") source = SchemeSpec::AltitudeSource::FromPlo;
            else if (name == "fixed") source = SchemeSpec::AltitudeSource::Fixed;
            else fail("po_altitude.source must be from_plo or fixed");
        }
        b.get("fixed_value_m", fixed_altitude);
        b.finish();
    }

    if (r.has("schemes")) {
        const json& list = r.raw("schemes");
        if (!list.is_array() || list.empty()) fail("schemes must be a non-empty array");
        config.schemes.clear();
        for (const json& entry : list) {
            const auto kind = parse_scheme(entry.get<std::string>());
            if (!kind) fail("schemes entries must be plo, pl or po");
            config.schemes.push_back({*kind});
        }
    }
    for (SchemeSpec& spec : config.schemes) {
        spec.fixed_orientation = pl_orientation;
        spec.altitude_source = source;
        spec.fixed_altitude = fixed_altitude;
    }

    if (r.has("seeds")) {
        ObjectReader b(r.raw("seeds"), "seeds");
        if (b.has("list")) {
            config.seeds = b.raw("list").get<std::vector<std::uint64_t>>();
        } else {
            int count = 10;
            std::uint64_t base = 1;
            b.get("count", count);
            b.get("base", base);
            if (count < 1) fail("seeds.count must be >= 1");
            config.seeds.clear();
            for (int i = 0; i < count; ++i) config.seeds.push_back(base + i);
        }
        b.finish();
    }
    r.finish();
    config.validate();
    return config;
}

AppConfig load_config(const std::string& path) {
    if (path.empty()) return AppConfig{};
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(path + " is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

nlohmann::json config_to_json(const AppConfig& config) {
    const ScenarioConfig& s = config.scenario;
    const solver::SolverParams& p = config.run.solver;
    const SmoothingParams& sp = config.run.smoothing;

    const char* schedule = p.schedule == solver::StepSchedule::Harmonic ? "harmonic"
                           : p.schedule == solver::StepSchedule::Constant ? "constant"
                                                                          : "geometric";
    const char* surrogate =
        p.surrogate == solver::SurrogateMode::Proximal ? "proximal" : "linear";

    std::vector<std::string> scheme_names;
    for (const SchemeSpec& spec : config.schemes)
        scheme_names.push_back(scheme_name(spec.kind));
    const SchemeSpec& front = config.schemes.front();

    return nlohmann::json{
        {"scenario",
         {{"area_x_m", s.area_x},
          {"area_y_m", s.area_y},
          {"user_count", s.user_count},
          {"bs",
           {{"x_m", s.bs_x},
            {"y_m", s.bs_y},
            {"altitude_m", s.bs_altitude},
            {"element_count", s.bs_element_count},
            {"horizontal_width_m", s.bs_horizontal_width},
            {"vertical_spacing_m", s.bs_vertical_spacing}}},
          {"ris",
           {{"horizontal_count", s.ris_horizontal_count},
            {"vertical_count", s.ris_vertical_count},
            {"horizontal_spacing_m", s.ris_horizontal_spacing},
            {"vertical_spacing_m", s.ris_vertical_spacing}}},
          {"radio",
           {{"wavelength_m", s.wavelength},
            {"tx_power_w", s.tx_power},
            {"antenna_gain_db", s.antenna_gain_db},
            {"reference_gain_db", s.reference_gain_db},
            {"noise_power_dbm", s.noise_power_dbm},
            {"bandwidth_hz", s.bandwidth}}},
          {"position_box_m",
           {{"x", {s.position_x_min, s.position_x_max}},
            {"y", {s.position_y_min, s.position_y_max}},
            {"z", {s.position_z_min, s.position_z_max}}}},
          {"orientation_box_rad",
           {{"roll", {s.roll_min, s.roll_max}},
            {"pitch", {s.pitch_min, s.pitch_max}},
            {"yaw", {s.yaw_min, s.yaw_max}}}}}},
        {"solver",
         {{"max_iterations", p.max_iterations},
          {"schedule", schedule},
          {"gamma0", p.gamma0},
          {"geometric_ratio", p.geometric_ratio},
          {"surrogate", surrogate},
          {"tau", p.tau},
          {"relative_tolerance", p.relative_tolerance},
          {"patience", p.patience},
          {"starts", config.run.starts},
          {"phase_gradient", config.run.analytic_phase_gradient ? "analytic" : "fd"}}},
        {"smoothing",
         {{"p_exponent", sp.p_exponent},
          {"phase_fd_step_rad", sp.phase_fd_step},
          {"position_fd_step_m", sp.position_fd_step},
          {"orientation_fd_step_rad", sp.orientation_fd_step}}},
        {"schemes", scheme_names},
        {"pl_fixed_orientation_rad",
         {front.fixed_orientation.roll, front.fixed_orientation.pitch,
          front.fixed_orientation.yaw}},
        {"po_altitude",
         {{"source", front.altitude_source == SchemeSpec::AltitudeSource::FromPlo
                         ? "from_plo"
                         : "fixed"},
          {"fixed_value_m", front.fixed_altitude}}},
        {"seeds", {{"list", config.seeds}}}};
}

}  // namespace aris
