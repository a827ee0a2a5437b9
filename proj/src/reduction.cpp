#include "casim/reduction.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "casim/boundary_ops.hpp"
#include "casim/errors.hpp"
#include "casim/quadrature.hpp"
#include "casim/xi_det.hpp"

namespace casim {

namespace {

bool is_even_positive_integer(double s) {
    if (!(s > 0.0)) return false;
    const double r = std::round(s);
    return r == s && std::fmod(r, 2.0) == 0.0;
}

void check_spec(double m, int r, double s) {
    if (!(s > 0.0)) throw unsupported_parameter_error("need s > 0");
    if (r < 0) throw unsupported_parameter_error("need r >= 0");
    if (m < 0.0) throw unsupported_parameter_error("need mass m >= 0");
    if (r + s < 1.0) {
        throw unsupported_parameter_error(
            "need r + s >= 1 (endpoint-bounded substituted integrand)");
    }
}

}  // namespace

double prefactor(int r, double s, bool* pole_flag) {
    if (!(s > 0.0)) throw unsupported_parameter_error("need s > 0");
    if (r < 0) throw unsupported_parameter_error("need r >= 0");
    if (pole_flag) *pole_flag = false;
    if (is_even_positive_integer(s)) {
        // Gamma(-s/2) pole: the constant vanishes identically.
        if (pole_flag) *pole_flag = true;
        return 0.0;
    }
    // -2^{1-r} pi^{-r/2} / (Gamma(-s/2) Gamma((r+s)/2)), with Gamma(-s/2)
    // rewritten by reflection so only positive Gamma arguments appear.
    return std::pow(2.0, 1 - r) * std::pow(M_PI, -0.5 * r - 1.0) *
           std::sin(M_PI * s / 2.0) * std::tgamma(1.0 + s / 2.0) /
           std::tgamma((r + s) / 2.0);
}

ReductionResult spectral_integral(const std::function<double(double)>& xi,
                                  double m, int r, double s,
                                  const QuadControls& controls, double d_min) {
    check_spec(m, r, s);
    if (!(d_min > 0.0)) throw std::invalid_argument("need d_min > 0");

    const double u_max = controls.safety_digits * std::log(10.0) / (2.0 * d_min) + 2.0;

    // Xi is by far the dominant cost; memoize per u within this evaluation.
    std::map<double, double> cache;
    long xi_evals = 0;
    const double exponent = r + s - 1.0;
    auto integrand = [&](double u) {
        auto it = cache.find(u);
        double xv;
        if (it != cache.end()) {
            xv = it->second;
        } else {
            xv = xi(std::sqrt(m * m + u * u));
            cache.emplace(u, xv);
            ++xi_evals;
        }
        return std::pow(u, exponent) * xv;
    };

    const QuadResult q = adaptive_gauss(integrand, 0.0, u_max, controls.rel_tol,
                                        controls.max_panels,
                                        /*throw_on_failure=*/false);
    ReductionResult res;
    res.value = q.value;
    res.abs_error = q.abs_error;
    res.evaluations = xi_evals;
    res.lambda_max = std::sqrt(m * m + u_max * u_max);
    res.converged = q.converged;
    if (!res.converged) {
        throw convergence_error(
            "spectral_integral: quadrature tolerance not met (best " +
                std::to_string(q.value) + " +/- " + std::to_string(q.abs_error) + ")",
            q.value, q.abs_error);
    }
    return res;
}

ReductionResult von_neumann_trace(const ObstacleSet& set,
                                  const ReductionSpec& spec,
                                  int nodes_per_curve) {
    check_spec(spec.mass, spec.r, spec.s);
    bool pole = false;
    const double c = prefactor(spec.r, spec.s, &pole);
    if (pole) {
        ReductionResult res;
        res.prefactor_zero = true;
        return res;
    }

    const BoundaryMesh mesh = build_mesh(set, nodes_per_curve);
    auto xi = [&](double kappa) {
        return xi_value(assemble(mesh, Wavenumber(kappa)));
    };
    const double d_min = min_separation(set);
    ReductionResult res;
    try {
        res = spectral_integral(xi, spec.mass, spec.r, spec.s, spec.controls, d_min);
    } catch (const convergence_error& e) {
        convergence_error scaled(e.what(), c * e.best_estimate,
                                 std::abs(c) * e.estimated_error);
        throw scaled;
    }
    res.value *= c;
    res.abs_error *= std::abs(c);
    return res;
}

ReductionResult casimir_energy(const ObstacleSet& set, double m, int r,
                               int nodes_per_curve, const QuadControls& controls) {
    ReductionSpec spec;
    spec.mass = m;
    spec.r = r;
    spec.s = 1.0;
    spec.controls = controls;
    ReductionResult res;
    try {
        res = von_neumann_trace(set, spec, nodes_per_curve);
    } catch (const convergence_error& e) {
        throw convergence_error(e.what(), 0.5 * e.best_estimate,
                                0.5 * e.estimated_error);
    }
    res.value *= 0.5;
    res.abs_error *= 0.5;
    return res;
}

}  // namespace casim
