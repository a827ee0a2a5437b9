#pragma once

#include <Eigen/Dense>
#include <vector>

#include "casim/geometry.hpp"
#include "casim/kernels.hpp"

namespace casim {

// Quadrature nodes on each boundary component. For d = 2 every curve gets a
// uniform parameter grid with an even node count; for d = 1 each component is
// its single point.
struct BoundaryMesh {
    struct Component {
        std::vector<double> t;        // node parameters (empty for d = 1)
        std::vector<Vec2> points;     // node coordinates ({x, 0} for d = 1)
        std::vector<double> speeds;   // |x'(t_k)|; 1 for d = 1
    };

    int dimension = 0;
    std::vector<Component> components;
    const ObstacleSet* set = nullptr;  // generating set (non-owning)

    std::size_t total_nodes() const;
    // First row/column index of component j in the assembled matrix.
    std::size_t offset(std::size_t j) const;
};

BoundaryMesh build_mesh(const ObstacleSet& set, int nodes_per_curve);

// Discretized single-layer system at lambda = i*kappa. The stored matrix is
// the symmetrized Nystrom matrix W^{1/2} H W^{1/2} (H the quadrature-split
// kernel, W the diagonal of quadrature weights); its determinant ratio
// against the block-diagonal part equals that of the plain Nystrom matrix.
struct LayerSystem {
    Eigen::MatrixXd full;                       // symmetric, positive definite
    std::vector<Eigen::MatrixXd> diag_blocks;   // bit-identical to full's diagonal blocks
    std::vector<std::size_t> offsets;           // block start indices, plus total
    double kappa = 0.0;
    const ObstacleSet* set = nullptr;

    std::size_t blocks() const { return diag_blocks.size(); }
    std::size_t block_rows(std::size_t j) const { return diag_blocks[j].rows(); }
};

// Assembles the single-layer matrix. Off-diagonal blocks use the plain
// trapezoidal rule (the kernel is smooth across components); diagonal d = 2
// blocks use the Kress log-trapezoidal rule for the K_0 singularity.
// kernel_scale multiplies every Green's-function evaluation; it exists to
// test the determinant-ratio invariance and defaults to 1.
LayerSystem assemble(const BoundaryMesh& mesh, Wavenumber k,
                     double kernel_scale = 1.0);

// Eigenvalues of the single-layer operator with kernel (1/2pi) K_0 on a
// circle of radius R: { R I_m(kappa R) K_m(kappa R) : m = 0..m_max }
// (each m >= 1 doubly degenerate). Analytic oracle for the Nystrom blocks.
std::vector<double> circle_eigenvalues(double R, Wavenumber k, int m_max);

// Kress weights R_p, p = 0..2n-1, for the periodic quadrature
//   integral_0^{2pi} ln(4 sin^2((t_i - tau)/2)) f(tau) dtau
//     ~ sum_j R_{|i-j|} f(t_j)
// on the uniform grid t_j = j pi / n. Exposed for direct testing.
std::vector<double> kress_log_weights(int two_n);

}  // namespace casim
