#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "aris/types.hpp"

namespace aris {

/// Raw world description before user placement. Gains are in dB here and
/// converted to linear once, when the Scenario is built. Defaults follow the
/// reference setup: 1000 m x 1000 m area, BS with a 10-element vertical
/// array at the frame origin at 68 m altitude, 5x4 RIS at half-wavelength
/// spacing, UAV box [0,1000]^2 x [150,300].
struct ScenarioConfig {
    double area_x = 1000.0;  // m
    double area_y = 1000.0;  // m
    int user_count = 10;

    double bs_x = 0.0;           // m
    double bs_y = 0.0;           // m
    double bs_altitude = 68.0;   // m
    int bs_element_count = 10;
    double bs_horizontal_width = 0.075;  // m
    double bs_vertical_spacing = 0.075;  // m

    int ris_horizontal_count = 5;
    int ris_vertical_count = 4;
    double ris_horizontal_spacing = 0.075;  // m
    double ris_vertical_spacing = 0.075;    // m

    double wavelength = 0.15;        // m
    double tx_power = 1.0;           // W
    double antenna_gain_db = 8.0;
    double reference_gain_db = -30.0;
    double noise_power_dbm = -100.0;
    double bandwidth = 1e7;          // Hz per user

    double position_x_min = 0.0, position_x_max = 1000.0;   // m
    double position_y_min = 0.0, position_y_max = 1000.0;   // m
    double position_z_min = 150.0, position_z_max = 300.0;  // m

    double roll_min = 0.0, roll_max = 1.5707963267948966;    // rad
    double pitch_min = 0.0, pitch_max = 1.5707963267948966;  // rad
    double yaw_min = 0.0, yaw_max = 6.283185307179586;       // rad

    /// Throws std::invalid_argument with a field name on any bad value.
    void validate() const;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

/// Immutable world description for one experiment: geometry, radio
/// constants, concrete user positions, and the feasible boxes.
struct Scenario {
    BsArrayGeometry bs;
    RisArrayGeometry ris;
    RadioParams radio;
    Eigen::Matrix3Xd users;  // one column per user, z = 0
    Box position_box;        // X2
    Box orientation_box;     // X3 (roll, pitch, yaw)

    int user_count() const { return static_cast<int>(users.cols()); }
    Box phase_box() const { return Box::cube(ris.total_elements(), 0.0, 2.0 * M_PI); }

    bool contains(const DecisionPoint& x) const {
        return phase_box().contains(x.phases) && position_box.contains(x.position) &&
               orientation_box.contains(x.orientation.vec());
    }
};

/// Builds the scenario from a validated config: converts dB quantities to
/// linear, then places user_count users uniformly on the ground area using
/// the seed's dedicated placement stream.
Scenario generate_scenario(std::uint64_t seed, const ScenarioConfig& config);

}  // namespace aris
