#pragma once

#include <functional>
#include <vector>

namespace casim {

// Gauss-Legendre rule on [-1, 1], nodes and weights by Newton iteration on
// the Legendre recurrence.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule make_gauss_rule(int n);

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;   // estimated
    long evaluations = 0;     // integrand calls
    bool converged = true;
};

// Adaptive composite Gauss-Legendre on [a, b]: 15-point panels with an
// embedded 7-point estimate, bisecting the panel with the largest
// disagreement until the summed error estimate meets the tolerance.
// Panels never evaluate at interval endpoints (open rule). Accumulation is
// pairwise in panel order, so the result does not depend on the refinement
// schedule's internal ordering.
//
// If the tolerance is not met within max_panels, throws convergence_error
// carrying the best estimate, unless throw_on_failure is false, in which
// case the result is returned with converged = false.
QuadResult adaptive_gauss(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, int max_panels,
                          bool throw_on_failure = true);

}  // namespace casim
