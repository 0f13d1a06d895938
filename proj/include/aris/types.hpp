#pragma once

#include <Eigen/Dense>

namespace aris {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Euler angles, XYZ convention, radians. Feasible range is
/// roll, pitch in [0, pi/2] and yaw in [0, 2*pi].
struct Orientation {
    double roll = 0.0;
    double pitch = 0.0;
    double yaw = 0.0;

    Vec3 vec() const { return {roll, pitch, yaw}; }
    static Orientation from_vec(const Eigen::Ref<const Vec3>& v) {
        return {v[0], v[1], v[2]};
    }
};

/// Vertical linear array at the base station. Element n (1-based) sits at
/// [horizontal_width, 0, (n-1)*vertical_spacing] relative to base_position.
struct BsArrayGeometry {
    int element_count = 10;
    double horizontal_width = 0.075;   // m
    double vertical_spacing = 0.075;   // m
    Vec3 base_position{0.0, 0.0, 68.0};
};

/// Uniform rectangular RIS array, indexed 1..M in the body frame.
struct RisArrayGeometry {
    int horizontal_count = 5;
    int vertical_count = 4;
    double horizontal_spacing = 0.075;  // m
    double vertical_spacing = 0.075;    // m

    int total_elements() const { return horizontal_count * vertical_count; }
};

/// Radio-link constants, all in linear units (conversions from dB happen
/// at the config boundary).
struct RadioParams {
    double wavelength = 0.15;        // m
    double reference_gain = 1e-3;    // path gain at 1 m
    double tx_power = 1.0;           // W
    double antenna_gain = 6.309573444801933;  // 8 dB
    double noise_power = 1e-13;      // W (-100 dBm)
    double bandwidth = 1e7;          // Hz per user
};

/// UAV decision state: reference position plus body orientation.
struct Pose {
    Vec3 position{0.0, 0.0, 0.0};
    Orientation orientation{};
};

/// Full decision point of the max-min problem: RIS phases (block 1),
/// UAV position (block 2), UAV orientation (block 3).
struct DecisionPoint {
    Eigen::VectorXd phases;  // M entries, radians in [0, 2*pi]
    Vec3 position{0.0, 0.0, 0.0};
    Orientation orientation{};

    Pose pose() const { return {position, orientation}; }
};

/// Axis-aligned box constraint, one bound pair per coordinate.
struct Box {
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;

    Eigen::Index size() const { return lower.size(); }
    Eigen::VectorXd width() const { return upper - lower; }

    bool contains(const Eigen::VectorXd& x, double tol = 0.0) const {
        return (x.array() >= lower.array() - tol).all() &&
               (x.array() <= upper.array() + tol).all();
    }
    Eigen::VectorXd clamp(const Eigen::VectorXd& x) const {
        return x.cwiseMax(lower).cwiseMin(upper);
    }

    static Box cube(Eigen::Index n, double lo, double hi) {
        return {Eigen::VectorXd::Constant(n, lo), Eigen::VectorXd::Constant(n, hi)};
    }
};

}  // namespace aris
