#pragma once

#include <functional>

#include "casim/geometry.hpp"

namespace casim {

struct QuadControls {
    double rel_tol = 1e-10;
    int max_panels = 200;
    double safety_digits = 14.0;  // tail-truncation budget against e^{-2 kappa d_min}
};

// Which spectral integral to evaluate: mass m, r translation-invariant
// dimensions, exponent s. Requires s > 0, r >= 0, r + s >= 1.
struct ReductionSpec {
    double mass = 0.0;
    int r = 0;
    double s = 1.0;
    QuadControls controls;
};

struct ReductionResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;      // distinct Xi evaluations
    double lambda_max = 0.0;   // truncation point of the lambda integral
    bool prefactor_zero = false;  // Gamma(-s/2) pole: result identically zero
    bool converged = true;
};

// The constant C(r, s) multiplying integral_m^inf lambda
// (lambda^2 - m^2)^{(r+s)/2 - 1} Xi(i lambda) dlambda. Evaluated through the
// reflection formula so no Gamma of a negative argument is ever computed:
//   C(r, s) = 2^{1-r} pi^{-r/2 - 1} sin(pi s / 2) Gamma(1 + s/2) / Gamma((r+s)/2).
// For r = 0 this reduces to (s/pi) sin(pi s / 2). At even positive s the
// prefactor vanishes identically; *pole_flag is set when provided.
double prefactor(int r, double s, bool* pole_flag = nullptr);

// integral_m^inf lambda (lambda^2 - m^2)^{(r+s)/2 - 1} Xi(i lambda) dlambda,
// computed after the substitution lambda = sqrt(m^2 + u^2), which turns the
// integrand into u^{r+s-1} Xi(i sqrt(m^2 + u^2)): bounded at u = 0 (given
// r + s >= 1) and exponentially decaying. Truncated at
// u_max = safety_digits ln(10) / (2 d_min) + 2. Xi values are cached per
// kappa within the call.
ReductionResult spectral_integral(const std::function<double(double)>& xi,
                                  double m, int r, double s,
                                  const QuadControls& controls, double d_min);

// prefactor(r, s) x spectral_integral with Xi from the Nystrom pipeline.
ReductionResult von_neumann_trace(const ObstacleSet& set,
                                  const ReductionSpec& spec,
                                  int nodes_per_curve);

// Casimir energy = 1/2 x von_neumann_trace at s = 1.
ReductionResult casimir_energy(const ObstacleSet& set, double m, int r,
                               int nodes_per_curve,
                               const QuadControls& controls = {});

}  // namespace casim
