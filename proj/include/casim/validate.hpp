#pragma once

#include <string>
#include <vector>

namespace casim {

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

// Full oracle suite: Bessel Wronskians and series/integral oracles, circle
// eigenvalues vs the Nystrom block, the 1D closed form, two-circle
// cross-validation, the xi-integral identity, prefactor consistency, and the
// parallel-plate benchmark.
std::vector<CheckResult> run_validation();

}  // namespace casim
