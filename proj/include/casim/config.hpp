#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casim/geometry.hpp"
#include "casim/reduction.hpp"

namespace casim {

// Run configuration parsed from a JSON file. See configs/ for annotated
// examples and the README for the schema.
struct RunConfig {
    ObstacleSet geometry;
    ReductionSpec physics;
    int nodes_per_curve = 64;
    std::vector<double> kappa_grid;  // empty unless the config declares one
    std::string output_dir = ".";
    std::string output_prefix = "run";

    RunConfig(ObstacleSet g) : geometry(std::move(g)) {}
};

RunConfig load_config(const std::string& path);

// Full round-trip decimal formatting (17 significant digits).
std::string format_full(double x);

}  // namespace casim
