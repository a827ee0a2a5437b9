#include <doctest.h>

#include <cmath>

#include "casim/errors.hpp"
#include "casim/kernels.hpp"
#include "casim/quadrature.hpp"

using namespace casim;

namespace {

// Power-series oracle, independent of the production implementation.
double bessel_i_series(int n, double z) {
    double term = std::pow(z / 2.0, n);
    for (int k = 1; k <= n; ++k) term /= k;
    double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= (z * z / 4.0) / (k * (n + k));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("Wavenumber validation") {
    CHECK_THROWS_AS(Wavenumber(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Wavenumber(-1.0), std::invalid_argument);
    CHECK(Wavenumber(2.5).kappa == 2.5);
}

TEST_CASE("bessel_i near zero argument") {
    CHECK(bessel_i(0, 1e-12) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("bessel_i matches the power series") {
    for (int n : {0, 1, 2, 5, 10, 20, 40}) {
        for (double z : {1e-6, 0.1, 1.0, 5.0, 20.0}) {
            const double ref = bessel_i_series(n, z);
            CHECK(bessel_i(n, z) == doctest::Approx(ref).epsilon(1e-13));
        }
    }
}

TEST_CASE("bessel_k0 against the integral representation") {
    // K_0(z) = integral_0^inf e^{-z cosh t} dt.
    for (double z : {0.5, 1.0, 3.0}) {
        auto f = [z](double t) { return std::exp(-z * std::cosh(t)); };
        const double ref = adaptive_gauss(f, 0.0, 25.0, 1e-13, 400).value;
        CHECK(bessel_k(0, z) == doctest::Approx(ref).epsilon(1e-13));
    }
}

TEST_CASE("Wronskian identity") {
    for (int n = 0; n <= 50; ++n) {
        for (double z : {0.1, 1.0, 10.0, 100.0}) {
            const double w = bessel_i(n, z) * bessel_k(n + 1, z) +
                             bessel_i(n + 1, z) * bessel_k(n, z);
            CHECK(z * w == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("bessel argument validation") {
    CHECK_THROWS_AS(bessel_i(0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_i(0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k(-1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_i(201, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_i(10, 0.75e308), std::range_error);
}

TEST_CASE("scaled and log variants") {
    CHECK(bessel_i_scaled(0, 2.0) ==
          doctest::Approx(bessel_i(0, 2.0) * std::exp(-2.0)).epsilon(1e-14));
    CHECK(std::exp(bessel_ln_k(3.0, 2.0)) ==
          doctest::Approx(bessel_k(3, 2.0)).epsilon(1e-13));
    CHECK(bessel_ln_k(-3.0, 2.0) == bessel_ln_k(3.0, 2.0));
}

TEST_CASE("green_imag values") {
    CHECK(green_imag(1, Wavenumber(1.0), 0.0) == 1.0);
    CHECK(green_imag(1, Wavenumber(2.0), 1.0) ==
          doctest::Approx(std::exp(-2.0) / 2.0).epsilon(1e-15));
    CHECK(green_imag(2, Wavenumber(1.0), 1.0) ==
          doctest::Approx(bessel_k(0, 1.0) / (2.0 * M_PI)).epsilon(1e-15));
    CHECK(green_imag(3, Wavenumber(1.0), 2.0) ==
          doctest::Approx(std::exp(-2.0) / (8.0 * M_PI)).epsilon(1e-15));

    // d=1 at rho=0 equals 1/kappa exactly.
    CHECK(green_imag(1, Wavenumber(4.0), 0.0) == 0.25);

    CHECK_THROWS_AS(green_imag(2, Wavenumber(1.0), 0.0), singular_evaluation_error);
    CHECK_THROWS_AS(green_imag(3, Wavenumber(1.0), 0.0), singular_evaluation_error);
    CHECK_THROWS_AS(green_imag(4, Wavenumber(1.0), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(green_imag(1, Wavenumber(1.0), -1.0), std::invalid_argument);
}

TEST_CASE("green_imag decreases in rho and kappa") {
    for (int d : {1, 2, 3}) {
        double prev_rho = green_imag(d, Wavenumber(1.0), 0.25);
        for (double rho : {0.5, 1.0, 2.0, 4.0}) {
            const double g = green_imag(d, Wavenumber(1.0), rho);
            CHECK(g < prev_rho);
            prev_rho = g;
        }
        double prev_kappa = green_imag(d, Wavenumber(0.25), 1.0);
        for (double kappa : {0.5, 1.0, 2.0, 4.0}) {
            const double g = green_imag(d, Wavenumber(kappa), 1.0);
            CHECK(g < prev_kappa);
            prev_kappa = g;
        }
    }
}
