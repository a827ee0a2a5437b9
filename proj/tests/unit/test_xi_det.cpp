#include <doctest.h>

#include <cmath>
#include <vector>

#include "casim/boundary_ops.hpp"
#include "casim/errors.hpp"
#include "casim/geometry.hpp"
#include "casim/oracles.hpp"
#include "casim/xi_det.hpp"

using namespace casim;

namespace {

ObstacleSet two_unit_circles_gap2() {
    std::vector<Obstacle> obs = {make_circle({0.0, 0.0}, 1.0, "left"),
                                 make_circle({4.0, 0.0}, 1.0, "right")};
    return ObstacleSet(2, std::move(obs));
}

double xi_at(const ObstacleSet& set, double kappa, int nodes,
             double kernel_scale = 1.0) {
    return xi_value(assemble(build_mesh(set, nodes), Wavenumber(kappa), kernel_scale));
}

// Least-squares slope of log|Xi| against kappa.
double decay_slope(const ObstacleSet& set, double k0, double k1, int nodes,
                   int count = 9) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < count; ++i) {
        const double kappa = k0 + (k1 - k0) * i / (count - 1);
        const double y = std::log(std::abs(xi_at(set, kappa, nodes)));
        sx += kappa;
        sy += y;
        sxx += kappa * kappa;
        sxy += kappa * y;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace

TEST_CASE("1D two points reproduce the closed form") {
    const ObstacleSet set = make_points_1d({0.0, 1.0});
    const double xi = xi_at(set, 1.0, 0);
    CHECK(xi == doctest::Approx(std::log1p(-std::exp(-2.0))).epsilon(1e-14));
    CHECK(xi == doctest::Approx(-0.1454135).epsilon(1e-6));

    for (double kappa : {0.5, 1.0, 2.0}) {
        CHECK(xi_at(set, kappa, 0) ==
              doctest::Approx(xi_1d(1.0, Wavenumber(kappa))).epsilon(1e-14));
    }
}

TEST_CASE("single obstacle gives exactly zero") {
    std::vector<Obstacle> obs = {make_circle({0.0, 0.0}, 1.0)};
    const ObstacleSet set(2, std::move(obs));
    CHECK(xi_at(set, 1.0, 32) == 0.0);
}

TEST_CASE("all routes agree") {
    const ObstacleSet circles = two_unit_circles_gap2();
    const LayerSystem sys = assemble(build_mesh(circles, 48), Wavenumber(1.0));
    const double stable = xi_value(sys);
    const double direct = xi_value_direct(sys);
    const double schur = xi_value_schur(sys);
    const double scale = std::max(1.0, std::abs(stable));
    CHECK(std::abs(stable - direct) <= 1e-10 * scale);
    CHECK(std::abs(stable - schur) <= 1e-10 * scale);
    CHECK(std::abs(direct - schur) <= 1e-10 * scale);

    const ObstacleSet pts = make_points_1d({0.0, 1.0});
    const LayerSystem psys = assemble(build_mesh(pts, 0), Wavenumber(1.0));
    CHECK(std::abs(xi_value(psys) - xi_value_schur(psys)) <= 1e-14);

    const ObstacleSet three = make_points_1d({0.0, 1.0, 2.5});
    const LayerSystem tsys = assemble(build_mesh(three, 0), Wavenumber(1.0));
    CHECK_THROWS_AS(xi_value_schur(tsys), std::invalid_argument);
    CHECK(std::abs(xi_value(tsys) - xi_value_direct(tsys)) <= 1e-12);
}

TEST_CASE("Xi is nonpositive") {
    std::vector<ObstacleSet> corpus;
    corpus.push_back(make_points_1d({0.0, 1.0}));
    corpus.push_back(make_points_1d({-0.3, 0.7, 2.0}));
    corpus.push_back(two_unit_circles_gap2());
    for (const auto& set : corpus) {
        for (double kappa : {0.2, 1.0, 3.0}) {
            CHECK(xi_at(set, kappa, 32) <= 1e-12);
        }
    }
}

TEST_CASE("kernel-normalization invariance") {
    const ObstacleSet set = two_unit_circles_gap2();
    const double base = xi_at(set, 1.0, 32);
    for (double c : {0.5, 2.0, 4.0 * M_PI}) {
        CHECK(std::abs(xi_at(set, 1.0, 32, c) - base) <= 1e-11);
    }
}

TEST_CASE("rigid-motion invariance") {
    const ObstacleSet set = two_unit_circles_gap2();
    const double base = xi_at(set, 1.0, 32);
    const ObstacleSet moved = rigid_transform(set, M_PI / 6.0, {0.7, -0.3});
    CHECK(std::abs(xi_at(moved, 1.0, 32) - base) <= 1e-10);

    const ObstacleSet pts = make_points_1d({0.0, 1.0});
    const double pbase = xi_at(pts, 1.0, 0);
    const ObstacleSet shifted = rigid_transform(pts, 0.0, {0.37, 0.0});
    CHECK(std::abs(xi_at(shifted, 1.0, 0) - pbase) <= 1e-14);
}

TEST_CASE("massless scaling: Xi_{sigma X}(i kappa) = Xi_X(i sigma kappa)") {
    const ObstacleSet set = two_unit_circles_gap2();
    for (double sigma : {0.5, 2.0}) {
        const ObstacleSet scaled = scale_set(set, sigma);
        CHECK(std::abs(xi_at(scaled, 1.0, 32) - xi_at(set, sigma, 32)) <= 1e-9);
    }
}

TEST_CASE("exponential decay in kappa") {
    const ObstacleSet set = two_unit_circles_gap2();
    const double d_min = 2.0;
    CHECK(decay_slope(set, 1.0, 4.0, 32) <= -2.0 * d_min * 0.9);

    const ObstacleSet pts = make_points_1d({0.0, 1.0});
    CHECK(decay_slope(pts, 1.0, 4.0, 0) <= -2.0 * 1.0 * 0.9);
}

TEST_CASE("xi_grid") {
    const ObstacleSet pts = make_points_1d({0.0, 1.0});

    const XiSamples single = xi_grid(pts, {1.0}, 0);
    CHECK(single.samples.size() == 1);
    CHECK(single.samples[0].xi == xi_at(pts, 1.0, 0));
    CHECK(single.samples[0].cond_estimate >= 1.0);
    CHECK(std::isfinite(single.samples[0].cond_estimate));

    const XiSamples grid = xi_grid(pts, {0.5, 1.0, 2.0}, 0);
    CHECK(grid.samples[0].xi == doctest::Approx(std::log1p(-std::exp(-1.0))).epsilon(1e-14));
    CHECK(grid.samples[1].xi == doctest::Approx(std::log1p(-std::exp(-2.0))).epsilon(1e-14));
    CHECK(grid.samples[2].xi == doctest::Approx(std::log1p(-std::exp(-4.0))).epsilon(1e-14));

    CHECK_THROWS_AS(xi_grid(pts, {1.0, 0.5}, 0), std::invalid_argument);
    CHECK_THROWS_AS(xi_grid(pts, {-1.0, 0.5}, 0), std::invalid_argument);
}

TEST_CASE("xi_grid decay ratio for gap-2 circles") {
    const ObstacleSet set = two_unit_circles_gap2();
    const XiSamples s = xi_grid(set, {2.0, 4.0}, 48);
    const double ratio = std::abs(s.samples[1].xi) / std::abs(s.samples[0].xi);
    CHECK(ratio <= std::exp(-2.0 * 2.0 * (4.0 - 2.0)) * 10.0);
}

TEST_CASE("xi_grid is deterministic across thread counts") {
    const ObstacleSet set = two_unit_circles_gap2();
    const std::vector<double> kappas = {0.5, 1.0, 1.5, 2.0, 2.5};
    const XiSamples a = xi_grid(set, kappas, 24, 1);
    const XiSamples b = xi_grid(set, kappas, 24, 4);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].xi == b.samples[i].xi);  // bitwise
        CHECK(a.samples[i].cond_estimate == b.samples[i].cond_estimate);
    }
}
