#include "aris/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aris/rng.hpp"

namespace aris {

namespace {

constexpr std::uint64_t kUserStream = 0x75736572ULL;  // "user"

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("scenario config: " + what);
}

}  // namespace

void ScenarioConfig::validate() const {
    require(area_x > 0.0 && area_y > 0.0, "area sides must be positive");
    require(user_count >= 1, "user_count must be >= 1");
    require(bs_element_count >= 1, "bs_element_count must be >= 1");
    require(bs_vertical_spacing > 0.0, "bs_vertical_spacing must be positive");
    require(ris_horizontal_count >= 1 && ris_vertical_count >= 1,
            "RIS element counts must be >= 1");
    require(ris_horizontal_spacing > 0.0 && ris_vertical_spacing > 0.0,
            "RIS spacings must be positive");
    require(wavelength > 0.0, "wavelength must be positive");
    require(tx_power > 0.0, "tx_power must be positive");
    require(bandwidth > 0.0, "bandwidth must be positive");
    require(position_x_min <= position_x_max, "position x bounds inverted");
    require(position_y_min <= position_y_max, "position y bounds inverted");
    require(position_z_min <= position_z_max, "position z bounds inverted");
    require(roll_min <= roll_max, "roll bounds inverted");
    require(pitch_min <= pitch_max, "pitch bounds inverted");
    require(yaw_min <= yaw_max, "yaw bounds inverted");
    require(bs_altitude >= 0.0, "bs_altitude must be non-negative");
}

Scenario generate_scenario(std::uint64_t seed, const ScenarioConfig& config) {
    config.validate();

    Scenario s;
    s.bs.element_count = config.bs_element_count;
    s.bs.horizontal_width = config.bs_horizontal_width;
    s.bs.vertical_spacing = config.bs_vertical_spacing;
    s.bs.base_position = {config.bs_x, config.bs_y, config.bs_altitude};

    s.ris.horizontal_count = config.ris_horizontal_count;
    s.ris.vertical_count = config.ris_vertical_count;
    s.ris.horizontal_spacing = config.ris_horizontal_spacing;
    s.ris.vertical_spacing = config.ris_vertical_spacing;

    s.radio.wavelength = config.wavelength;
    s.radio.reference_gain = db_to_linear(config.reference_gain_db);
    s.radio.tx_power = config.tx_power;
    s.radio.antenna_gain = db_to_linear(config.antenna_gain_db);
    s.radio.noise_power = dbm_to_watt(config.noise_power_dbm);
    s.radio.bandwidth = config.bandwidth;

    Rng rng(derive_stream(seed, {kUserStream}));
    s.users.resize(3, config.user_count);
    for (int k = 0; k < config.user_count; ++k) {
        s.users(0, k) = rng.uniform(0.0, config.area_x);
        s.users(1, k) = rng.uniform(0.0, config.area_y);
        s.users(2, k) = 0.0;
    }

    s.position_box.lower = Vec3(config.position_x_min, config.position_y_min,
                                config.position_z_min);
    s.position_box.upper = Vec3(config.position_x_max, config.position_y_max,
                                config.position_z_max);
    s.orientation_box.lower = Vec3(config.roll_min, config.pitch_min, config.yaw_min);
    s.orientation_box.upper = Vec3(config.roll_max, config.pitch_max, config.yaw_max);
    return s;
}

}  // namespace aris
