#pragma once

#include <vector>

#include "casim/boundary_ops.hpp"
#include "casim/geometry.hpp"

namespace casim {

struct XiSample {
    double kappa = 0.0;
    double xi = 0.0;
    double cond_estimate = 0.0;
};

struct XiSamples {
    std::vector<XiSample> samples;
    int nodes_per_curve = 0;
};

// Xi(i*kappa) = log det(S) - log det(S_diag). Computed through the coupling
// form: with S_diag = L L^T (blockwise Cholesky) and
// E = L^{-1} (S - S_diag) L^{-T}, Xi = sum log1p(eig(E)). This is exact
// algebra but avoids the catastrophic cancellation of subtracting two large
// log-determinants when Xi itself is exponentially small.
double xi_value(const LayerSystem& system);

// Plain difference of log-determinants via Cholesky pivots of S and S_diag.
// Cross-check route; absolute accuracy only.
double xi_value_direct(const LayerSystem& system);

// N = 2 only: log det(I - S11^{-1} S12 S22^{-1} S21). Independent
// computational path for the two-block case.
double xi_value_schur(const LayerSystem& system);

// Reciprocal of the 1-norm condition estimate of the full matrix.
double xi_cond_estimate(const LayerSystem& system);

// One xi_value per kappa, each from a fresh assembly. kappa values may be
// evaluated in parallel (threads > 1); output order follows input order and
// is independent of scheduling.
XiSamples xi_grid(const ObstacleSet& set, const std::vector<double>& kappas,
                  int nodes_per_curve, int threads = 1);

}  // namespace casim
