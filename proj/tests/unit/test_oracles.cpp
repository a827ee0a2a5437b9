#include <doctest.h>

#include <cmath>
#include <vector>

#include "casim/boundary_ops.hpp"
#include "casim/errors.hpp"
#include "casim/geometry.hpp"
#include "casim/oracles.hpp"
#include "casim/xi_det.hpp"

using namespace casim;

TEST_CASE("xi_1d closed form") {
    CHECK(xi_1d(1.0, Wavenumber(1.0)) ==
          doctest::Approx(std::log1p(-std::exp(-2.0))).epsilon(1e-15));
    CHECK(xi_1d(0.5, Wavenumber(3.0)) ==
          doctest::Approx(std::log1p(-std::exp(-3.0))).epsilon(1e-15));

    // Small kappa: Xi ~ log(2 kappa a).
    const double k = 1e-8;
    CHECK(xi_1d(1.0, Wavenumber(k)) / std::log(2.0 * k) ==
          doctest::Approx(1.0).epsilon(1e-7));

    CHECK_THROWS_AS(xi_1d(0.0, Wavenumber(1.0)), std::invalid_argument);
    CHECK_THROWS_AS(xi_1d(-1.0, Wavenumber(1.0)), std::invalid_argument);
}

TEST_CASE("two-circle oracle is symmetric under swapping the circles") {
    const TwoCircleXi a = xi_two_circles(1.0, 0.5, 3.0, Wavenumber(1.2), 30);
    const TwoCircleXi b = xi_two_circles(0.5, 1.0, 3.0, Wavenumber(1.2), 30);
    CHECK(a.xi == doctest::Approx(b.xi).epsilon(1e-13));
}

TEST_CASE("two-circle oracle truncation estimate shrinks with m_max") {
    // Narrow gap so mode convergence is slow enough to sit above roundoff.
    double prev = 1e300;
    for (int m_max : {6, 9, 12, 15}) {
        const TwoCircleXi r = xi_two_circles(1.0, 1.0, 2.2, Wavenumber(0.5), m_max);
        CHECK(r.truncation_estimate >= 0.0);
        CHECK(r.truncation_estimate < prev);
        prev = r.truncation_estimate;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("two-circle oracle cross-validates the Nystrom pipeline") {
    std::vector<Obstacle> obs = {make_circle({0.0, 0.0}, 1.0, "left"),
                                 make_circle({4.0, 0.0}, 1.0, "right")};
    const ObstacleSet set(2, std::move(obs));
    const BoundaryMesh mesh = build_mesh(set, 128);
    for (double kappa : {0.5, 1.0, 2.0}) {
        const double nystrom = xi_value(assemble(mesh, Wavenumber(kappa)));
        const TwoCircleXi mp = xi_two_circles(1.0, 1.0, 4.0, Wavenumber(kappa), 40);
        CHECK(std::abs(nystrom - mp.xi) <= 1e-8 * std::abs(mp.xi));
    }
}

TEST_CASE("two-circle oracle decays like the gap") {
    // |Xi| ~ e^{-2 kappa (d - R1 - R2)} up to algebraic factors.
    const double gap = 4.0 - 2.0;
    const TwoCircleXi a = xi_two_circles(1.0, 1.0, 4.0, Wavenumber(2.0), 40);
    const TwoCircleXi b = xi_two_circles(1.0, 1.0, 4.0, Wavenumber(4.0), 40);
    const double slope = (std::log(std::abs(b.xi)) - std::log(std::abs(a.xi))) / 2.0;
    CHECK(slope <= -2.0 * gap * 0.9);
}

TEST_CASE("two-circle oracle validation") {
    CHECK_THROWS_AS(xi_two_circles(1.0, 1.0, 2.0, Wavenumber(1.0), 30),
                    invalid_geometry_error);
    CHECK_THROWS_AS(xi_two_circles(1.0, 1.0, 1.5, Wavenumber(1.0), 30),
                    invalid_geometry_error);
    CHECK_THROWS_AS(xi_two_circles(-1.0, 1.0, 4.0, Wavenumber(1.0), 30),
                    invalid_geometry_error);
    CHECK_THROWS_AS(xi_two_circles(1.0, 1.0, 4.0, Wavenumber(1.0), 4),
                    std::invalid_argument);
}

TEST_CASE("xi integral identity, exactly computable cases") {
    // r=1, s=-4, A=1: both sides pi/2.
    const IdentityCheck a = xi_integral_identity_check(1, -4.0, 1.0, 0.0);
    CHECK(a.lhs == doctest::Approx(M_PI / 2.0).epsilon(1e-10));
    CHECK(a.rhs == doctest::Approx(M_PI / 2.0).epsilon(1e-13));

    // r=1, s=-4, A=2: rhs = (pi/2) A^{-3} = pi/16.
    const IdentityCheck b = xi_integral_identity_check(1, -4.0, 2.0, 0.0);
    CHECK(b.rhs == doctest::Approx(M_PI / 16.0).epsilon(1e-13));
    CHECK(b.lhs == doctest::Approx(b.rhs).epsilon(1e-10));
}

TEST_CASE("xi integral identity over a parameter sample") {
    for (int r : {1, 2}) {
        for (double s : {-4.0, -5.0}) {
            for (double lambda : {0.5, 1.0, 2.0}) {
                for (double m : {0.0, 1.0}) {
                    const IdentityCheck c =
                        xi_integral_identity_check(r, s, lambda, m);
                    CHECK(std::abs(c.lhs - c.rhs) <= 1e-8 * std::abs(c.rhs));
                }
            }
        }
    }
}

TEST_CASE("xi integral identity validation") {
    CHECK_THROWS_AS(xi_integral_identity_check(3, -5.0, 1.0, 0.0),
                    unsupported_parameter_error);
    CHECK_THROWS_AS(xi_integral_identity_check(1, -1.0, 1.0, 0.0),
                    unsupported_parameter_error);  // needs s < -r
    CHECK_THROWS_AS(xi_integral_identity_check(1, -4.0, 0.0, 0.0),
                    std::invalid_argument);
}
