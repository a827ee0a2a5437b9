#include "casim/config.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "casim/errors.hpp"

namespace casim {

namespace {

using nlohmann::json;

Obstacle parse_obstacle(const json& j, std::size_t index) {
    const std::string type = j.at("type").get<std::string>();
    const std::string label =
        j.value("label", type + std::to_string(index));
    if (type == "point") {
        return Obstacle{label, Point1D{j.at("position").get<double>()}};
    }
    if (type == "circle") {
        const auto c = j.at("center").get<std::vector<double>>();
        if (c.size() != 2) throw std::invalid_argument("circle center needs 2 coordinates");
        Obstacle ob = make_circle({c[0], c[1]}, j.at("radius").get<double>(), label);
        return ob;
    }
    if (type == "fourier_curve") {
        Curve2D curve;
        curve.cos_x = j.value("cos_x", std::vector<double>{});
        curve.sin_x = j.value("sin_x", std::vector<double>{});
        curve.cos_y = j.value("cos_y", std::vector<double>{});
        curve.sin_y = j.value("sin_y", std::vector<double>{});
        if (j.contains("center")) {
            const auto c = j.at("center").get<std::vector<double>>();
            if (c.size() != 2) throw std::invalid_argument("curve center needs 2 coordinates");
            curve.center = {c[0], c[1]};
        }
        curve.scale = j.value("scale", 1.0);
        return Obstacle{label, curve};
    }
    throw std::invalid_argument("unknown obstacle type '" + type + "'");
}

std::vector<double> parse_kappa_grid(const json& j) {
    const std::string type = j.value("type", "list");
    if (type == "list") {
        return j.at("values").get<std::vector<double>>();
    }
    const double lo = j.at("min").get<double>();
    const double hi = j.at("max").get<double>();
    const int count = j.at("count").get<int>();
    if (count < 1 || !(hi >= lo) || !(lo > 0.0)) {
        throw std::invalid_argument("bad kappa grid bounds");
    }
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        if (type == "linear") {
            grid[i] = lo + f * (hi - lo);
        } else if (type == "log") {
            grid[i] = lo * std::pow(hi / lo, f);
        } else {
            throw std::invalid_argument("kappa grid type must be list|linear|log");
        }
    }
    return grid;
}

}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("config parse error in " + path + ": " + e.what());
    }

    const json& geom = j.at("geometry");
    const int dim = geom.at("dimension").get<int>();
    std::vector<Obstacle> obstacles;
    std::size_t idx = 0;
    for (const auto& ob : geom.at("obstacles")) {
        obstacles.push_back(parse_obstacle(ob, idx++));
    }
    RunConfig cfg(ObstacleSet(dim, std::move(obstacles)));

    if (j.contains("physics")) {
        const json& ph = j.at("physics");
        cfg.physics.mass = ph.value("mass", 0.0);
        cfg.physics.r = ph.value("r", 0);
        cfg.physics.s = ph.value("s", 1.0);
    }
    if (j.contains("numerics")) {
        const json& num = j.at("numerics");
        cfg.nodes_per_curve = num.value("nodes_per_curve", 64);
        cfg.physics.controls.rel_tol = num.value("quad_rel_tol", 1e-10);
        cfg.physics.controls.max_panels = num.value("max_panels", 200);
        cfg.physics.controls.safety_digits = num.value("safety_digits", 14.0);
        if (num.contains("kappa_grid")) {
            cfg.kappa_grid = parse_kappa_grid(num.at("kappa_grid"));
        }
    }
    if (j.contains("output")) {
        const json& out = j.at("output");
        cfg.output_dir = out.value("dir", ".");
        cfg.output_prefix = out.value("prefix", "run");
    }
    return cfg;
}

std::string format_full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace casim
