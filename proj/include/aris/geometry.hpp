#pragma once

#include <Eigen/Dense>

#include "aris/types.hpp"

namespace aris::geom {

/// Body-to-global rotation for XYZ Euler angles (roll, pitch, yaw).
/// Equivalent to Rx(roll) * Ry(pitch) * Rz(yaw); entries written out so the
/// matrix is exact for any scalar type.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> rotation_matrix(Scalar roll, Scalar pitch, Scalar yaw) {
    using std::cos;
    using std::sin;
    const Scalar cph = cos(roll), sph = sin(roll);
    const Scalar cth = cos(pitch), sth = sin(pitch);
    const Scalar cps = cos(yaw), sps = sin(yaw);

    Eigen::Matrix<Scalar, 3, 3> r;
    r << cth * cps, -cth * sps, sth,
         cph * sps + cps * sph * sth, cph * cps - sph * sth * sps, -cth * sph,
         sph * sps - cph * cps * sth, cps * sph + cph * sth * sps, cph * cth;
    return r;
}

inline Mat3 rotation_matrix(const Orientation& o) {
    return rotation_matrix<double>(o.roll, o.pitch, o.yaw);
}

/// Position of BS antenna element n (1-based) relative to the array base.
Vec3 bs_element_position(int n, const BsArrayGeometry& g);

/// All N element offsets as columns of a 3xN matrix.
Eigen::Matrix3Xd bs_element_positions(const BsArrayGeometry& g);

/// Body-frame position of RIS element m (1-based). The index map uses the
/// vertical count as divisor and the horizontal count as modulus; for
/// rectangular layouts the resulting M positions are not guaranteed distinct
/// for every (M_H, M_V) pair, but they are for the 5x4 default.
Vec3 ris_element_body_position(int m, const RisArrayGeometry& g);

/// All M body-frame element positions as columns of a 3xM matrix.
Eigen::Matrix3Xd ris_element_body_positions(const RisArrayGeometry& g);

/// Global-frame offsets of every RIS element relative to element 1:
/// column m-1 holds R(orientation) * (p_m - p_1). Column 0 is zero.
Eigen::Matrix3Xd ris_global_offsets(const RisArrayGeometry& g, const Orientation& o);

/// Elevation/azimuth pair of a link direction; the unit direction vector is
/// [cos(el)cos(az), cos(el)sin(az), sin(el)].
struct LinkAngles {
    double elevation = 0.0;
    double azimuth = 0.0;
};

/// Angles of the straight link from -> to. Azimuth of a vertical link is
/// defined as 0 (the horizontal direction components vanish there).
/// Throws std::invalid_argument for coincident endpoints.
LinkAngles link_angles(const Vec3& from, const Vec3& to);

/// Component-wise mean of the given positions (columns).
/// Throws std::invalid_argument on an empty set.
Vec3 barycenter(const Eigen::Ref<const Eigen::Matrix3Xd>& points);

}  // namespace aris::geom
