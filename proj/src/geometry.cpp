#include "aris/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace aris::geom {

Vec3 bs_element_position(int n, const BsArrayGeometry& g) {
    if (n < 1 || n > g.element_count)
        throw std::out_of_range("bs_element_position: index outside 1..N");
    return {g.horizontal_width, 0.0, (n - 1) * g.vertical_spacing};
}

Eigen::Matrix3Xd bs_element_positions(const BsArrayGeometry& g) {
    Eigen::Matrix3Xd p(3, g.element_count);
    for (int n = 1; n <= g.element_count; ++n) p.col(n - 1) = bs_element_position(n, g);
    return p;
}

Vec3 ris_element_body_position(int m, const RisArrayGeometry& g) {
    if (m < 1 || m > g.total_elements())
        throw std::out_of_range("ris_element_body_position: index outside 1..M");
    const int i = m - 1;
    return {(i / g.vertical_count) * g.vertical_spacing,
            (i % g.horizontal_count) * g.horizontal_spacing, 0.0};
}

Eigen::Matrix3Xd ris_element_body_positions(const RisArrayGeometry& g) {
    Eigen::Matrix3Xd p(3, g.total_elements());
    for (int m = 1; m <= g.total_elements(); ++m)
        p.col(m - 1) = ris_element_body_position(m, g);
    return p;
}

Eigen::Matrix3Xd ris_global_offsets(const RisArrayGeometry& g, const Orientation& o) {
    const Eigen::Matrix3Xd body = ris_element_body_positions(g);
    return rotation_matrix(o) * (body.colwise() - body.col(0));
}

LinkAngles link_angles(const Vec3& from, const Vec3& to) {
    const Vec3 d = to - from;
    const double r = d.norm();
    if (r == 0.0) throw std::invalid_argument("link_angles: coincident endpoints");
    const double sin_el = std::clamp(d.z() / r, -1.0, 1.0);
    LinkAngles a;
    a.elevation = std::asin(sin_el);
    a.azimuth = (d.x() == 0.0 && d.y() == 0.0) ? 0.0 : std::atan2(d.y(), d.x());
    return a;
}

Vec3 barycenter(const Eigen::Ref<const Eigen::Matrix3Xd>& points) {
    if (points.cols() == 0) throw std::invalid_argument("barycenter: empty point set");
    return points.rowwise().mean();
}

}  // namespace aris::geom
