#include "casim/xi_det.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "casim/errors.hpp"

namespace casim {

namespace {

// Blockwise Cholesky of S_diag. Failure means a diagonal block is not
// numerically positive definite: under-resolved mesh or touching obstacles.
std::vector<Eigen::LLT<Eigen::MatrixXd>> factor_diag(const LayerSystem& sys) {
    std::vector<Eigen::LLT<Eigen::MatrixXd>> llts;
    llts.reserve(sys.blocks());
    for (std::size_t b = 0; b < sys.blocks(); ++b) {
        llts.emplace_back(sys.diag_blocks[b]);
        if (llts.back().info() != Eigen::Success) {
            throw factorization_error(
                "diagonal block " + std::to_string(b) +
                " is not positive definite at kappa=" + std::to_string(sys.kappa));
        }
    }
    return llts;
}

double log_det_from_llt(const Eigen::LLT<Eigen::MatrixXd>& llt) {
    double s = 0.0;
    const auto& L = llt.matrixLLT();
    for (Eigen::Index i = 0; i < L.rows(); ++i) s += std::log(L(i, i));
    return 2.0 * s;
}

}  // namespace

double xi_value(const LayerSystem& sys) {
    if (sys.blocks() == 1) return 0.0;  // S == S_diag by construction

    const auto llts = factor_diag(sys);

    // E = L^{-1} (S - S_diag) L^{-T} with L block-diagonal; only the
    // off-diagonal blocks of S survive the subtraction.
    const Eigen::Index n = sys.full.rows();
    Eigen::MatrixXd coupling = sys.full;
    for (std::size_t b = 0; b < sys.blocks(); ++b) {
        const auto o = static_cast<Eigen::Index>(sys.offsets[b]);
        const auto nb = static_cast<Eigen::Index>(sys.block_rows(b));
        coupling.block(o, o, nb, nb).setZero();
    }
    for (std::size_t b = 0; b < sys.blocks(); ++b) {
        const auto o = static_cast<Eigen::Index>(sys.offsets[b]);
        const auto nb = static_cast<Eigen::Index>(sys.block_rows(b));
        auto L = llts[b].matrixL();
        coupling.middleRows(o, nb) = L.solve(coupling.middleRows(o, nb));
        coupling.middleCols(o, nb) =
            L.solve(coupling.middleCols(o, nb).transpose()).transpose();
    }
    coupling = 0.5 * (coupling + coupling.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(coupling,
                                                      Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw numerical_breakdown_error("eigendecomposition of the coupling failed");
    }
    double xi = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ev = es.eigenvalues()[i];
        if (ev <= -1.0) {
            throw numerical_breakdown_error(
                "I + coupling lost positive definiteness at kappa=" +
                std::to_string(sys.kappa));
        }
        xi += std::log1p(ev);
    }
    return xi;
}

double xi_value_direct(const LayerSystem& sys) {
    if (sys.blocks() == 1) return 0.0;
    const auto llts = factor_diag(sys);
    double log_det_diag = 0.0;
    for (const auto& llt : llts) log_det_diag += log_det_from_llt(llt);

    Eigen::LLT<Eigen::MatrixXd> full(sys.full);
    if (full.info() != Eigen::Success) {
        throw numerical_breakdown_error(
            "full single-layer matrix is not positive definite at kappa=" +
            std::to_string(sys.kappa));
    }
    return log_det_from_llt(full) - log_det_diag;
}

double xi_value_schur(const LayerSystem& sys) {
    if (sys.blocks() != 2) {
        throw std::invalid_argument("Schur route requires exactly two obstacles");
    }
    const auto llts = factor_diag(sys);
    const auto n1 = static_cast<Eigen::Index>(sys.block_rows(0));
    const auto n2 = static_cast<Eigen::Index>(sys.block_rows(1));
    const Eigen::MatrixXd S12 = sys.full.block(0, n1, n1, n2);

    // det(S S_diag^{-1}) = det(I - S11^{-1} S12 S22^{-1} S21)
    const Eigen::MatrixXd X = llts[0].solve(S12);              // S11^{-1} S12
    const Eigen::MatrixXd Y = llts[1].solve(S12.transpose());  // S22^{-1} S21
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n1, n1) - X * Y;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
    double xi = 0.0;
    const auto& U = lu.matrixLU();
    for (Eigen::Index i = 0; i < n1; ++i) xi += std::log(std::abs(U(i, i)));
    return xi;
}

double xi_cond_estimate(const LayerSystem& sys) {
    Eigen::LLT<Eigen::MatrixXd> llt(sys.full);
    if (llt.info() != Eigen::Success) {
        throw numerical_breakdown_error(
            "condition estimate: matrix not positive definite");
    }
    const double rc = llt.rcond();
    return rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
}

XiSamples xi_grid(const ObstacleSet& set, const std::vector<double>& kappas,
                  int nodes_per_curve, int threads) {
    for (std::size_t i = 0; i < kappas.size(); ++i) {
        if (!(kappas[i] > 0.0)) {
            throw std::invalid_argument("kappa grid must be strictly positive");
        }
        if (i > 0 && !(kappas[i] > kappas[i - 1])) {
            throw std::invalid_argument("kappa grid must be strictly increasing");
        }
    }
    const BoundaryMesh mesh = build_mesh(set, nodes_per_curve);

    auto eval_one = [&](double kappa) -> XiSample {
        try {
            const LayerSystem sys = assemble(mesh, Wavenumber(kappa));
            return XiSample{kappa, xi_value(sys), xi_cond_estimate(sys)};
        } catch (const std::exception& e) {
            throw std::runtime_error("xi_grid at kappa=" + std::to_string(kappa) +
                                     ": " + e.what());
        }
    };

    XiSamples out;
    out.nodes_per_curve = nodes_per_curve;
    out.samples.resize(kappas.size());
    if (threads <= 1 || kappas.size() < 2) {
        for (std::size_t i = 0; i < kappas.size(); ++i) {
            out.samples[i] = eval_one(kappas[i]);
        }
        return out;
    }

    // Each kappa is independent; results land in input order.
    std::vector<std::future<XiSample>> futures(kappas.size());
    std::size_t next = 0;
    while (next < kappas.size()) {
        const std::size_t batch =
            std::min<std::size_t>(threads, kappas.size() - next);
        for (std::size_t i = 0; i < batch; ++i) {
            futures[next + i] = std::async(std::launch::async, eval_one,
                                           kappas[next + i]);
        }
        for (std::size_t i = 0; i < batch; ++i) {
            out.samples[next + i] = futures[next + i].get();
        }
        next += batch;
    }
    return out;
}

}  // namespace casim
