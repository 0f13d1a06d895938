#include "aris/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace aris {

namespace {

Eigen::VectorXcd unit_phasors(const Eigen::VectorXd& phases) {
    return phases.array().cos().cast<Complex>() +
           Complex(0.0, 1.0) * phases.array().sin().cast<Complex>();
}

double snr_of(Complex c, const RadioParams& radio) {
    return radio.tx_power * radio.antenna_gain * std::norm(c) / radio.noise_power;
}

}  // namespace

Vec3 wave_vector(double elevation, double azimuth, double wavelength) {
    const double k = 2.0 * M_PI / wavelength;
    return {k * std::cos(elevation) * std::cos(azimuth),
            k * std::cos(elevation) * std::sin(azimuth), k * std::sin(elevation)};
}

Eigen::VectorXcd array_response(const Eigen::Ref<const Eigen::Matrix3Xd>& positions,
                                double elevation, double azimuth, double wavelength) {
    const Vec3 s = wave_vector(elevation, azimuth, wavelength);
    const Eigen::VectorXd phase = positions.transpose() * s;
    return unit_phasors(phase);
}

Complex path_coefficient(double distance, double wavelength, double reference_gain) {
    if (distance <= 0.0)
        throw std::invalid_argument("path_coefficient: distance must be positive");
    const double magnitude = std::sqrt(reference_gain) / distance;
    return std::polar(magnitude, -2.0 * M_PI * distance / wavelength);
}

ChannelRealization assemble_channels(const Scenario& scenario, const Pose& pose) {
    ChannelRealization ch;
    const RadioParams& radio = scenario.radio;
    const int users = scenario.user_count();

    // BS -> RIS link; one propagation direction serves the departure angles
    // at the BS and the arrival angles at the RIS.
    ch.bs_ris_angles = geom::link_angles(scenario.bs.base_position, pose.position);
    ch.bs_ris_distance = (pose.position - scenario.bs.base_position).norm();

    const Eigen::Matrix3Xd bs_elements = geom::bs_element_positions(scenario.bs);
    const Eigen::Matrix3Xd ris_offsets =
        geom::ris_global_offsets(scenario.ris, pose.orientation);

    const Eigen::VectorXcd a_tx_bs =
        array_response(bs_elements, ch.bs_ris_angles.elevation, ch.bs_ris_angles.azimuth,
                       radio.wavelength);
    const Eigen::VectorXcd a_rx_ris =
        array_response(ris_offsets, ch.bs_ris_angles.elevation, ch.bs_ris_angles.azimuth,
                       radio.wavelength);

    const Complex eta_bs_ris =
        path_coefficient(ch.bs_ris_distance, radio.wavelength, radio.reference_gain);
    ch.bs_ris = eta_bs_ris * (a_rx_ris * a_tx_bs.adjoint());
    ch.beamformer = a_tx_bs / a_tx_bs.norm();

    ch.ris_user_distance.resize(users);
    ch.ris_user_angles.resize(users);
    ch.ris_user.resize(ris_offsets.cols(), users);
    for (int k = 0; k < users; ++k) {
        const Vec3 user = scenario.users.col(k);
        ch.ris_user_angles[k] = geom::link_angles(pose.position, user);
        ch.ris_user_distance[k] = (user - pose.position).norm();
        const Eigen::VectorXcd a_tx_ris =
            array_response(ris_offsets, ch.ris_user_angles[k].elevation,
                           ch.ris_user_angles[k].azimuth, radio.wavelength);
        const Complex eta = path_coefficient(ch.ris_user_distance[k], radio.wavelength,
                                             radio.reference_gain);
        ch.ris_user.col(k) = eta * a_tx_ris.conjugate();
    }
    return ch;
}

Eigen::MatrixXcd cascade_weights(const ChannelRealization& ch) {
    const Eigen::VectorXcd hf = ch.bs_ris * ch.beamformer;
    return ch.ris_user.array().colwise() * hf.array();
}

Eigen::VectorXcd cascade(const ChannelRealization& ch, const Eigen::VectorXd& phases) {
    return cascade_weights(ch).transpose() * unit_phasors(phases);
}

double user_rate(const ChannelRealization& ch, const Eigen::VectorXd& phases, int user,
                 const RadioParams& radio) {
    if (user < 0 || user >= ch.ris_user.cols())
        throw std::out_of_range("user_rate: user index out of range");
    const Eigen::VectorXcd hf = ch.bs_ris * ch.beamformer;
    const Complex c =
        (ch.ris_user.col(user).array() * hf.array() * unit_phasors(phases).array()).sum();
    return radio.bandwidth * std::log2(1.0 + snr_of(c, radio));
}

Eigen::VectorXd all_user_rates(const ChannelRealization& ch,
                               const Eigen::VectorXd& phases, const RadioParams& radio) {
    const Eigen::VectorXcd c = cascade(ch, phases);
    Eigen::VectorXd rates(c.size());
    for (Eigen::Index k = 0; k < c.size(); ++k)
        rates[k] = radio.bandwidth * std::log2(1.0 + snr_of(c[k], radio));
    return rates;
}

}  // namespace aris
