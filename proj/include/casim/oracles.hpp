#pragma once

#include "casim/kernels.hpp"

namespace casim {

// Closed form for two points at distance a: Xi(i kappa) = log(1 - e^{-2 kappa a}).
double xi_1d(double a, Wavenumber k);

struct TwoCircleXi {
    double xi = 0.0;
    double truncation_estimate = 0.0;  // change from dropping the last mode
};

// Multipole oracle for two circles (radii R1, R2, center distance d > R1+R2):
// Xi = log det(I - T) with T built in the angular Fourier bases. Diagonal
// single-layer blocks have eigenvalues R_j I_m(kappa R_j) K_m(kappa R_j);
// the off-diagonal block couples modes m, n through K_{n-m}(kappa d).
// Entirely independent of the Nystrom discretization.
TwoCircleXi xi_two_circles(double R1, double R2, double d, Wavenumber k,
                           int m_max);

struct IdentityCheck {
    double lhs = 0.0;  // direct quadrature over xi in R^r
    double rhs = 0.0;  // closed form via Gamma functions
};

// Both sides of
//   integral_{R^r} (lambda^2 + m^2 + xi^2)^{s/2} dxi
//     = pi^{r/2} Gamma(-s/2 - r/2) / Gamma(-s/2) (lambda^2 + m^2)^{(r+s)/2}
// for r in {1, 2} and s < -r (absolute convergence).
IdentityCheck xi_integral_identity_check(int r, double s, double lambda,
                                         double m);

}  // namespace casim
