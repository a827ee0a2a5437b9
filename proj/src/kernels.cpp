#include "casim/kernels.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "casim/errors.hpp"

namespace casim {

namespace {

constexpr int kMaxOrder = 200;

struct GslHandlerGuard {
    // GSL's default handler aborts the process; we want error codes.
    GslHandlerGuard() { old = gsl_set_error_handler_off(); }
    ~GslHandlerGuard() { gsl_set_error_handler(old); }
    gsl_error_handler_t* old;
};

void check_order_arg(int n, double z) {
    if (n < 0 || n > kMaxOrder) {
        throw std::invalid_argument("Bessel order must be in [0, " +
                                    std::to_string(kMaxOrder) + "], got " +
                                    std::to_string(n));
    }
    if (!(z > 0.0)) {
        throw std::invalid_argument("Bessel argument must be positive");
    }
}

}  // namespace

Wavenumber::Wavenumber(double kappa) : kappa(kappa) {
    if (!(kappa > 0.0)) {
        throw std::invalid_argument("wavenumber kappa must be positive");
    }
}

double bessel_i(int n, double z) {
    check_order_arg(n, z);
    GslHandlerGuard guard;
    gsl_sf_result res;
    const int status = gsl_sf_bessel_In_e(n, z, &res);
    if (status == GSL_EOVRFLW) {
        throw std::range_error("I_" + std::to_string(n) + "(" +
                               std::to_string(z) + ") overflows");
    }
    if (status != GSL_SUCCESS) {
        throw std::range_error(std::string("bessel_i: ") + gsl_strerror(status));
    }
    return res.val;
}

double bessel_k(int n, double z) {
    check_order_arg(n, z);
    GslHandlerGuard guard;
    gsl_sf_result res;
    const int status = gsl_sf_bessel_Kn_e(n, z, &res);
    if (status == GSL_EUNDRFLW) return 0.0;  // K_n at huge z: exact-ish zero
    if (status != GSL_SUCCESS) {
        throw std::range_error(std::string("bessel_k: ") + gsl_strerror(status));
    }
    return res.val;
}

double bessel_i_scaled(int n, double z) {
    check_order_arg(n, z);
    GslHandlerGuard guard;
    gsl_sf_result res;
    const int status = gsl_sf_bessel_In_scaled_e(n, z, &res);
    if (status != GSL_SUCCESS) {
        throw std::range_error(std::string("bessel_i_scaled: ") + gsl_strerror(status));
    }
    return res.val;
}

double bessel_ln_k(double nu, double z) {
    if (nu < 0.0) nu = -nu;  // K_{-nu} = K_nu
    if (!(z > 0.0)) {
        throw std::invalid_argument("Bessel argument must be positive");
    }
    GslHandlerGuard guard;
    gsl_sf_result res;
    const int status = gsl_sf_bessel_lnKnu_e(nu, z, &res);
    if (status != GSL_SUCCESS) {
        throw std::range_error(std::string("bessel_ln_k: ") + gsl_strerror(status));
    }
    return res.val;
}

double green_imag(int d, Wavenumber k, double rho) {
    if (rho < 0.0) {
        throw std::invalid_argument("distance rho must be nonnegative");
    }
    switch (d) {
        case 1:
            return std::exp(-k.kappa * rho) / k.kappa;
        case 2:
            if (rho == 0.0) {
                throw singular_evaluation_error("G diverges at rho=0 for d=2");
            }
            return bessel_k(0, k.kappa * rho) / (2.0 * M_PI);
        case 3:
            if (rho == 0.0) {
                throw singular_evaluation_error("G diverges at rho=0 for d=3");
            }
            return std::exp(-k.kappa * rho) / (4.0 * M_PI * rho);
        default:
            throw std::invalid_argument("green_imag supports d in {1,2,3}");
    }
}

}  // namespace casim
