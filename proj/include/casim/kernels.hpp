#pragma once

namespace casim {

// Spectral parameter on the positive imaginary axis: lambda = i*kappa,
// kappa > 0. All kernel evaluations in this library are real because they
// only ever happen at imaginary lambda.
struct Wavenumber {
    explicit Wavenumber(double kappa);
    double kappa;
};

// Modified Bessel functions I_n, K_n for integer orders 0 <= n <= 200,
// z in (0, ~700]. Relative accuracy target 1e-13.
double bessel_i(int n, double z);
double bessel_k(int n, double z);

// Scaled/log variants for multipole sums whose individual factors overflow:
// bessel_i_scaled = e^{-z} I_n(z), bessel_ln_k = log K_nu(z).
double bessel_i_scaled(int n, double z);
double bessel_ln_k(double nu, double z);

// Free-space Green's function of (Delta_0 - lambda^2)^{-1} at lambda = i*kappa,
// as a function of the point distance rho:
//   d = 1:  (1/kappa) e^{-kappa rho}
//   d = 2:  (1/2pi) K_0(kappa rho)       (rho > 0)
//   d = 3:  e^{-kappa rho} / (4 pi rho)  (rho > 0; unused by discretization)
double green_imag(int d, Wavenumber k, double rho);

inline constexpr double euler_gamma = 0.57721566490153286061;

}  // namespace casim
