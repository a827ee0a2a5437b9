// casim: batch front-end for obstacle-interaction determinants, Casimir
// energies, and von-Neumann relative traces.
//
// Subcommands: xi | energy | trace | sweep | validate.
// Exit codes: 0 success, 1 convergence failure, 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <variant>

#include "casim/boundary_ops.hpp"
#include "casim/config.hpp"
#include "casim/errors.hpp"
#include "casim/geometry.hpp"
#include "casim/oracles.hpp"
#include "casim/reduction.hpp"
#include "casim/validate.hpp"
#include "casim/xi_det.hpp"

namespace {

using nlohmann::json;

constexpr int kExitConvergence = 1;
constexpr int kExitInvalidInput = 2;

struct Options {
    std::string config_path;
    std::string out_dir;       // overrides the config when set
    int threads = 1;
    double tolerance = 0.0;    // overrides quad_rel_tol when > 0
    bool dump_matrices = false;
};

std::filesystem::path output_path(const casim::RunConfig& cfg,
                                  const Options& opt, const std::string& suffix) {
    const std::string dir = opt.out_dir.empty() ? cfg.output_dir : opt.out_dir;
    std::filesystem::create_directories(dir);
    return std::filesystem::path(dir) / (cfg.output_prefix + suffix);
}

casim::RunConfig load(const Options& opt) {
    casim::RunConfig cfg = casim::load_config(opt.config_path);
    if (opt.tolerance > 0.0) cfg.physics.controls.rel_tol = opt.tolerance;
    return cfg;
}

void dump_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m,
                 double kappa) {
    std::ofstream out(path);
    out << m.rows() << " " << m.cols() << " " << casim::format_full(kappa) << "\n";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            out << casim::format_full(m(i, j)) << "\n";
        }
    }
}

json result_json(const casim::RunConfig& cfg, const casim::ReductionResult& r,
                 bool failed) {
    return json{{"value", r.value},
                {"abs_error", r.abs_error},
                {"evaluations", r.evaluations},
                {"lambda_max", r.lambda_max},
                {"prefactor_zero", r.prefactor_zero},
                {"failed", failed},
                {"spec",
                 {{"mass", cfg.physics.mass},
                  {"r", cfg.physics.r},
                  {"s", cfg.physics.s},
                  {"nodes_per_curve", cfg.nodes_per_curve}}}};
}

int cmd_xi(const Options& opt) {
    const casim::RunConfig cfg = load(opt);
    if (cfg.kappa_grid.empty()) {
        std::cerr << "xi: config must declare numerics.kappa_grid\n";
        return kExitInvalidInput;
    }
    const casim::XiSamples samples =
        casim::xi_grid(cfg.geometry, cfg.kappa_grid, cfg.nodes_per_curve, opt.threads);

    const auto path = output_path(cfg, opt, "_xi.csv");
    std::ofstream out(path);
    out << "kappa,xi,cond_estimate\n";
    for (const auto& s : samples.samples) {
        out << casim::format_full(s.kappa) << "," << casim::format_full(s.xi)
            << "," << casim::format_full(s.cond_estimate) << "\n";
    }
    std::cout << path.string() << "\n";

    if (opt.dump_matrices) {
        const casim::BoundaryMesh mesh =
            casim::build_mesh(cfg.geometry, cfg.nodes_per_curve);
        for (std::size_t i = 0; i < cfg.kappa_grid.size(); ++i) {
            const auto sys =
                casim::assemble(mesh, casim::Wavenumber(cfg.kappa_grid[i]));
            dump_matrix(output_path(cfg, opt, "_matrix_" + std::to_string(i) + ".txt"),
                        sys.full, cfg.kappa_grid[i]);
        }
    }
    return 0;
}

int run_reduction(const Options& opt, bool energy) {
    const casim::RunConfig cfg = load(opt);
    const char* suffix = energy ? "_energy.json" : "_trace.json";
    casim::ReductionResult res;
    bool failed = false;
    try {
        res = energy ? casim::casimir_energy(cfg.geometry, cfg.physics.mass,
                                             cfg.physics.r, cfg.nodes_per_curve,
                                             cfg.physics.controls)
                     : casim::von_neumann_trace(cfg.geometry, cfg.physics,
                                                cfg.nodes_per_curve);
    } catch (const casim::convergence_error& e) {
        failed = true;
        res.value = e.best_estimate;
        res.abs_error = e.estimated_error;
        res.converged = false;
        std::cerr << "convergence failure: " << e.what() << "\n";
    }
    const auto path = output_path(cfg, opt, suffix);
    std::ofstream out(path);
    out << result_json(cfg, res, failed).dump(2) << "\n";
    std::cout << path.string() << "\n";
    return failed ? kExitConvergence : 0;
}

// Moves the second of two obstacles along the axis between the obstacle
// centroids so that min_separation equals `sep` (exact for points and
// circles).
casim::ObstacleSet with_separation(const casim::ObstacleSet& set, double sep) {
    if (set.size() != 2) {
        throw std::invalid_argument("separation sweep needs exactly two obstacles");
    }
    if (!(sep > 0.0)) throw std::invalid_argument("separation must be positive");

    auto centroid = [](const casim::Obstacle& ob) -> casim::Vec2 {
        if (const auto* pt = std::get_if<casim::Point1D>(&ob.shape)) {
            return {pt->position, 0.0};
        }
        const auto& c = std::get<casim::Curve2D>(ob.shape);
        double x = 0.0, y = 0.0;
        for (int i = 0; i < 64; ++i) {
            const auto p = c.point(2.0 * M_PI * i / 64);
            x += p[0];
            y += p[1];
        }
        return {x / 64, y / 64};
    };

    const double d0 = casim::min_separation(set);
    const auto c1 = centroid(set.obstacle(0));
    const auto c2 = centroid(set.obstacle(1));
    const double len = std::hypot(c2[0] - c1[0], c2[1] - c1[1]);
    const double ux = (c2[0] - c1[0]) / len, uy = (c2[1] - c1[1]) / len;
    const double shift = sep - d0;

    std::vector<casim::Obstacle> obs = set.obstacles();
    if (auto* pt = std::get_if<casim::Point1D>(&obs[1].shape)) {
        pt->position += shift * ux;
    } else {
        auto& c = std::get<casim::Curve2D>(obs[1].shape);
        c.center[0] += shift * ux;
        c.center[1] += shift * uy;
    }
    return casim::ObstacleSet(set.dimension(), std::move(obs));
}

int cmd_sweep(const Options& opt, const std::string& param,
              const std::vector<double>& values) {
    static const std::vector<std::string> known = {"separation", "mass", "s", "r",
                                                   "nodes"};
    if (std::find(known.begin(), known.end(), param) == known.end()) {
        std::cerr << "sweep: unknown parameter '" << param
                  << "' (use separation|mass|s|r|nodes)\n";
        return kExitInvalidInput;
    }
    if (values.empty()) {
        std::cerr << "sweep: no values given\n";
        return kExitInvalidInput;
    }

    const casim::RunConfig cfg = load(opt);
    const auto path = output_path(cfg, opt, "_sweep.csv");
    std::ofstream out(path);
    out << param << ",value,abs_error,evaluations,lambda_max\n";

    bool any_failed = false;
    for (const double v : values) {
        casim::ReductionSpec spec = cfg.physics;
        int nodes = cfg.nodes_per_curve;
        const casim::ObstacleSet* set = &cfg.geometry;
        std::optional<casim::ObstacleSet> moved;
        if (param == "separation") {
            moved.emplace(with_separation(cfg.geometry, v));
            set = &*moved;
        } else if (param == "mass") {
            spec.mass = v;
        } else if (param == "s") {
            spec.s = v;
        } else if (param == "r") {
            spec.r = static_cast<int>(v);
        } else {
            nodes = static_cast<int>(v);
        }
        casim::ReductionResult res;
        try {
            res = casim::von_neumann_trace(*set, spec, nodes);
            res.value *= 0.5;  // energies, matching the energy subcommand
            res.abs_error *= 0.5;
        } catch (const casim::convergence_error& e) {
            any_failed = true;
            res.value = 0.5 * e.best_estimate;
            res.abs_error = 0.5 * e.estimated_error;
            std::cerr << "sweep " << param << "=" << v << ": " << e.what() << "\n";
        }
        out << casim::format_full(v) << "," << casim::format_full(res.value) << ","
            << casim::format_full(res.abs_error) << "," << res.evaluations << ","
            << casim::format_full(res.lambda_max) << "\n";
    }
    std::cout << path.string() << "\n";
    return any_failed ? kExitConvergence : 0;
}

int cmd_validate() {
    const auto checks = casim::run_validation();
    bool all_ok = true;
    std::printf("%-28s %-6s %-12s %-12s %s\n", "check", "status", "residual",
                "tolerance", "detail");
    for (const auto& c : checks) {
        all_ok = all_ok && c.passed;
        std::printf("%-28s %-6s %-12.3e %-12.3e %s\n", c.name.c_str(),
                    c.passed ? "pass" : "FAIL", c.residual, c.tolerance,
                    c.detail.c_str());
    }
    std::printf("%s\n", all_ok ? "all checks passed" : "VALIDATION FAILED");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"obstacle-interaction determinants, Casimir energies, and "
                 "von-Neumann relative traces"};
    app.require_subcommand(1);

    Options opt;
    std::string sweep_param;
    std::vector<double> sweep_values;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* c = cmd->add_option("--config", opt.config_path, "config file (JSON)");
        if (needs_config) c->required();
        cmd->add_option("--out", opt.out_dir, "output directory (overrides config)");
        cmd->add_option("--threads", opt.threads, "worker threads for kappa grids");
        cmd->add_option("--tolerance", opt.tolerance,
                        "quadrature relative tolerance (overrides config)");
        cmd->add_flag("--dump-matrices", opt.dump_matrices,
                      "write assembled matrices (column-major text)");
    };

    auto* xi = app.add_subcommand("xi", "evaluate Xi(i kappa) on the config's grid");
    add_common(xi, true);
    auto* energy = app.add_subcommand("energy", "Casimir energy for the config");
    add_common(energy, true);
    auto* trace = app.add_subcommand("trace", "von-Neumann relative trace");
    add_common(trace, true);
    auto* sweep = app.add_subcommand("sweep", "energy sweep over one parameter");
    add_common(sweep, true);
    sweep->add_option("--param", sweep_param, "separation|mass|s|r|nodes")->required();
    sweep->add_option("--values", sweep_values, "sweep values")->required();
    auto* validate = app.add_subcommand("validate", "run the oracle suite");
    add_common(validate, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }

    try {
        if (xi->parsed()) return cmd_xi(opt);
        if (energy->parsed()) return run_reduction(opt, true);
        if (trace->parsed()) return run_reduction(opt, false);
        if (sweep->parsed()) return cmd_sweep(opt, sweep_param, sweep_values);
        return cmd_validate();
    } catch (const casim::invalid_geometry_error& e) {
        std::cerr << "invalid geometry: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const casim::unsupported_parameter_error& e) {
        std::cerr << "unsupported parameters: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const casim::convergence_error& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConvergence;
    }
}
