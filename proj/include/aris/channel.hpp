#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "aris/geometry.hpp"
#include "aris/scenario.hpp"
#include "aris/types.hpp"

namespace aris {

using Complex = std::complex<double>;

/// Plane-wave vector for a link with the given elevation/azimuth:
/// (2*pi/wavelength) * [cos(el)cos(az), cos(el)sin(az), sin(el)].
/// Dotted with an element position it gives that element's phase.
Vec3 wave_vector(double elevation, double azimuth, double wavelength);

/// Unit-modulus array response exp(j * s^T p_i) for every element position
/// (columns of `positions`).
Eigen::VectorXcd array_response(const Eigen::Ref<const Eigen::Matrix3Xd>& positions,
                                double elevation, double azimuth, double wavelength);

/// Line-of-sight path coefficient: magnitude sqrt(reference_gain)/distance,
/// phase -2*pi*distance/wavelength. Throws for non-positive distance.
Complex path_coefficient(double distance, double wavelength, double reference_gain);

/// All link quantities for one UAV pose: distances, angles, the BS-RIS
/// channel, the per-user RIS-user channels, and the MRT beamformer. Rates
/// are not part of the realization; they need a phase configuration.
struct ChannelRealization {
    double bs_ris_distance = 0.0;       // d_BR
    Eigen::VectorXd ris_user_distance;  // d_Rk, K entries

    geom::LinkAngles bs_ris_angles;                 // shared by BS AoD and RIS AoA
    std::vector<geom::LinkAngles> ris_user_angles;  // RIS AoD towards user k

    Eigen::MatrixXcd bs_ris;     // H, M x N rank-1
    Eigen::MatrixXcd ris_user;   // column k holds g_k, M x K
    Eigen::VectorXcd beamformer; // f, unit-norm N-vector
};

/// Builds the channel realization at the given pose. The BS steering vector
/// uses the element offsets relative to the array base; the RIS responses
/// use the rotated offsets relative to element 1, so orientation enters only
/// through the RIS phase profiles. Throws std::invalid_argument when the
/// UAV coincides with the BS or a user.
ChannelRealization assemble_channels(const Scenario& scenario, const Pose& pose);

/// Per-element cascade weights v(m, k) = g_k[m] * (H f)[m]; the cascade
/// scalar for user k is c_k = sum_m v(m, k) * exp(j*theta_m).
Eigen::MatrixXcd cascade_weights(const ChannelRealization& ch);

/// Cascade scalars for all users at the given phase configuration.
Eigen::VectorXcd cascade(const ChannelRealization& ch, const Eigen::VectorXd& phases);

/// Data rate of user k in bits/s:
/// bandwidth * log2(1 + tx_power*antenna_gain*|c_k|^2 / noise_power).
double user_rate(const ChannelRealization& ch, const Eigen::VectorXd& phases,
                 int user, const RadioParams& radio);

/// Rates of every user, sharing one cascade evaluation.
Eigen::VectorXd all_user_rates(const ChannelRealization& ch,
                               const Eigen::VectorXd& phases, const RadioParams& radio);

}  // namespace aris
