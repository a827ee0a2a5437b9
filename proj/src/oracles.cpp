#include "casim/oracles.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "casim/errors.hpp"
#include "casim/quadrature.hpp"

namespace casim {

double xi_1d(double a, Wavenumber k) {
    if (!(a > 0.0)) throw std::invalid_argument("separation a must be positive");
    return std::log1p(-std::exp(-2.0 * k.kappa * a));
}

namespace {

double ln_bessel_i(int n, double z) {
    const double scaled = bessel_i_scaled(n, z);
    // Scaled I underflows for very high orders; -inf propagates to a zero
    // matrix entry, which is the correct limit.
    return scaled > 0.0 ? std::log(scaled) + z
                        : -std::numeric_limits<double>::infinity();
}

// log of the symmetrized coupling entry
//   B_{mn} = U_{mn} / sqrt(sigma1_m sigma2_n)
// with U_{mn} = (-1)^n sqrt(R1 R2) I_m(kR1) I_n(kR2) K_{n-m}(kd) and
// sigma_j = R_j I(kR_j) K(kR_j). The radii cancel; everything stays in log
// space so no individual Bessel factor can overflow.
double ln_coupling(int m, int n, double kappa, double R1, double R2, double d) {
    const double half1 = 0.5 * (ln_bessel_i(std::abs(m), kappa * R1) -
                                bessel_ln_k(std::abs(m), kappa * R1));
    const double half2 = 0.5 * (ln_bessel_i(std::abs(n), kappa * R2) -
                                bessel_ln_k(std::abs(n), kappa * R2));
    return half1 + half2 + bessel_ln_k(n - m, kappa * d);
}

double xi_from_coupling(const Eigen::MatrixXd& B) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(B);
    double xi = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double sv = svd.singularValues()[i];
        if (sv >= 1.0) {
            throw numerical_breakdown_error(
                "multipole coupling has singular value >= 1");
        }
        xi += std::log1p(-sv * sv);
    }
    return xi;
}

}  // namespace

TwoCircleXi xi_two_circles(double R1, double R2, double d, Wavenumber k,
                           int m_max) {
    if (!(R1 > 0.0) || !(R2 > 0.0)) {
        throw invalid_geometry_error("circle radii must be positive");
    }
    if (!(d > R1 + R2)) {
        throw invalid_geometry_error("circles must be disjoint: need d > R1 + R2");
    }
    if (m_max < 5) throw std::invalid_argument("need m_max >= 5");

    const int K = 2 * m_max + 1;
    Eigen::MatrixXd B(K, K);
    for (int m = -m_max; m <= m_max; ++m) {
        for (int n = -m_max; n <= m_max; ++n) {
            const double lnB = ln_coupling(m, n, k.kappa, R1, R2, d);
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            B(m + m_max, n + m_max) = sign * std::exp(lnB);
        }
    }

    TwoCircleXi out;
    out.xi = xi_from_coupling(B);
    // Truncation estimate: change from dropping the outermost mode.
    const double xi_prev = xi_from_coupling(B.block(1, 1, K - 2, K - 2));
    out.truncation_estimate = std::abs(out.xi - xi_prev);
    return out;
}

IdentityCheck xi_integral_identity_check(int r, double s, double lambda,
                                         double m) {
    if (r != 1 && r != 2) {
        throw unsupported_parameter_error("identity check supports r in {1, 2}");
    }
    if (!(s < -static_cast<double>(r))) {
        throw unsupported_parameter_error("need s < -r for absolute convergence");
    }
    const double A2 = lambda * lambda + m * m;
    if (!(A2 > 0.0)) {
        throw std::invalid_argument("need lambda^2 + m^2 > 0");
    }
    const double A = std::sqrt(A2);

    // Substitution xi = A tan(theta) maps R^r radially onto [0, pi/2) with a
    // bounded integrand.
    IdentityCheck out;
    if (r == 1) {
        auto f = [&](double th) { return std::pow(std::cos(th), -s - 2.0); };
        out.lhs = 2.0 * std::pow(A, s + 1.0) *
                  adaptive_gauss(f, 0.0, M_PI / 2.0, 1e-12, 200).value;
    } else {
        auto f = [&](double th) {
            return std::sin(th) * std::pow(std::cos(th), -s - 3.0);
        };
        out.lhs = 2.0 * M_PI * std::pow(A, s + 2.0) *
                  adaptive_gauss(f, 0.0, M_PI / 2.0, 1e-12, 200).value;
    }
    out.rhs = std::pow(M_PI, 0.5 * r) *
              std::tgamma(-0.5 * s - 0.5 * r) / std::tgamma(-0.5 * s) *
              std::pow(A2, 0.5 * (r + s));
    return out;
}

}  // namespace casim
