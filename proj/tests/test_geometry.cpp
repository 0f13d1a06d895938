#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "aris/geometry.hpp"
#include "aris/rng.hpp"

using namespace aris;
using namespace aris::geom;

namespace {

Orientation random_orientation(Rng& rng) {
    return {rng.uniform(0.0, M_PI / 2), rng.uniform(0.0, M_PI / 2),
            rng.uniform(0.0, 2.0 * M_PI)};
}

}  // namespace

TEST_CASE("rotation matrix at zero angles is the identity") {
    CHECK((rotation_matrix({0.0, 0.0, 0.0}) - Mat3::Identity()).norm() == 0.0);
}

TEST_CASE("rotation matrix for a quarter-turn yaw") {
    Mat3 expected;
    expected << 0, -1, 0, 1, 0, 0, 0, 0, 1;
    CHECK((rotation_matrix({0.0, 0.0, M_PI / 2}) - expected).norm() < 1e-15);
}

TEST_CASE("rotation matrices are orthonormal with unit determinant") {
    Rng rng(42);
    for (int i = 0; i < 300; ++i) {
        const Mat3 r = rotation_matrix(random_orientation(rng));
        CHECK((r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("rotation composes roll, pitch, yaw in XYZ order") {
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        const Orientation o = random_orientation(rng);
        const Mat3 composed = rotation_matrix({o.roll, 0.0, 0.0}) *
                              rotation_matrix({0.0, o.pitch, 0.0}) *
                              rotation_matrix({0.0, 0.0, o.yaw});
        CHECK((rotation_matrix(o) - composed).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("bs element positions") {
    BsArrayGeometry g;
    CHECK(bs_element_position(1, g) == Vec3(0.075, 0.0, 0.0));
    CHECK(bs_element_position(3, g).z() == doctest::Approx(0.15));

    const Eigen::Matrix3Xd all = bs_element_positions(g);
    for (int n = 1; n < g.element_count; ++n) {
        const Vec3 diff = all.col(n) - all.col(n - 1);
        CHECK(diff.x() == 0.0);
        CHECK(diff.y() == 0.0);
        CHECK(diff.z() == doctest::Approx(g.vertical_spacing));
    }

    CHECK_THROWS_AS(bs_element_position(0, g), std::out_of_range);
    CHECK_THROWS_AS(bs_element_position(g.element_count + 1, g), std::out_of_range);
}

TEST_CASE("ris element body positions follow the printed index map") {
    RisArrayGeometry g;  // 5 x 4, spacing 0.075
    CHECK(ris_element_body_position(1, g) == Vec3(0.0, 0.0, 0.0));
    CHECK(ris_element_body_position(2, g) == Vec3(0.0, 0.075, 0.0));
    // m = 6: floor(5/4) = 1 vertical steps, mod(5, 5) = 0 horizontal steps
    CHECK(ris_element_body_position(6, g) == Vec3(0.075, 0.0, 0.0));
    CHECK_THROWS_AS(ris_element_body_position(0, g), std::out_of_range);
    CHECK_THROWS_AS(ris_element_body_position(21, g), std::out_of_range);
}

TEST_CASE("all 20 default ris elements sit at distinct positions") {
    RisArrayGeometry g;
    const Eigen::Matrix3Xd p = ris_element_body_positions(g);
    for (int a = 0; a < p.cols(); ++a)
        for (int b = a + 1; b < p.cols(); ++b)
            CHECK((p.col(a) - p.col(b)).norm() > 1e-9);
}

TEST_CASE("ris offsets at identity orientation equal body positions") {
    RisArrayGeometry g;
    const Eigen::Matrix3Xd offsets = ris_global_offsets(g, {});
    const Eigen::Matrix3Xd body = ris_element_body_positions(g);
    CHECK((offsets - body).norm() == 0.0);  // first body element is the origin
    CHECK(offsets.col(0).norm() == 0.0);
}

TEST_CASE("ris offsets preserve pairwise distances under rotation") {
    RisArrayGeometry g;
    const Eigen::Matrix3Xd body = ris_element_body_positions(g);
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Matrix3Xd rotated = ris_global_offsets(g, random_orientation(rng));
        for (int a = 0; a < body.cols(); ++a)
            for (int b = a + 1; b < body.cols(); ++b) {
                const double expected = (body.col(a) - body.col(b)).norm();
                const double actual = (rotated.col(a) - rotated.col(b)).norm();
                CHECK(std::abs(actual - expected) < 1e-12);
            }
    }
}

TEST_CASE("quarter-turn yaw maps a body-y offset onto negative x") {
    RisArrayGeometry g;
    const Eigen::Matrix3Xd offsets = ris_global_offsets(g, {0.0, 0.0, M_PI / 2});
    // element 2 sits at [0, d, 0] in the body frame
    CHECK((offsets.col(1) - Vec3(-0.075, 0.0, 0.0)).norm() < 1e-15);
}

TEST_CASE("link angles on the reference directions") {
    const auto along_x = link_angles({0, 0, 0}, {1, 0, 0});
    CHECK(along_x.elevation == 0.0);
    CHECK(along_x.azimuth == 0.0);

    const auto vertical = link_angles({0, 0, 0}, {0, 0, 1});
    CHECK(vertical.elevation == doctest::Approx(M_PI / 2));
    CHECK(vertical.azimuth == 0.0);  // azimuth tie-break for vertical links

    const auto diagonal = link_angles({0, 0, 0}, {1, 1, std::sqrt(2.0)});
    CHECK(diagonal.elevation == doctest::Approx(M_PI / 4));
    CHECK(diagonal.azimuth == doctest::Approx(M_PI / 4));

    CHECK_THROWS_AS(link_angles({1, 2, 3}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("link angles reconstruct the unit direction") {
    Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        const Vec3 from(rng.uniform(-100, 100), rng.uniform(-100, 100),
                        rng.uniform(-100, 100));
        const Vec3 to(rng.uniform(-100, 100), rng.uniform(-100, 100),
                      rng.uniform(-100, 100));
        if ((to - from).norm() < 1e-6) continue;
        const auto a = link_angles(from, to);
        const Vec3 unit(std::cos(a.elevation) * std::cos(a.azimuth),
                        std::cos(a.elevation) * std::sin(a.azimuth),
                        std::sin(a.elevation));
        CHECK((unit - (to - from).normalized()).norm() < 1e-12);
    }
}

TEST_CASE("barycenter") {
    Eigen::Matrix3Xd single(3, 1);
    single.col(0) = Vec3(0, 0, 0);
    CHECK(barycenter(single) == Vec3(0, 0, 0));

    Eigen::Matrix3Xd pair(3, 2);
    pair.col(0) = Vec3(0, 0, 0);
    pair.col(1) = Vec3(2, 4, 0);
    CHECK(barycenter(pair) == Vec3(1, 2, 0));

    Eigen::Matrix3Xd swapped(3, 2);
    swapped.col(0) = pair.col(1);
    swapped.col(1) = pair.col(0);
    CHECK(barycenter(swapped) == barycenter(pair));

    CHECK_THROWS_AS(barycenter(Eigen::Matrix3Xd(3, 0)), std::invalid_argument);
}
