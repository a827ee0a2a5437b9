#pragma once

#include <stdexcept>
#include <string>

namespace casim {

// Geometry that cannot be used: overlapping obstacles, nonpositive radius,
// unordered 1D points, and the like.
class invalid_geometry_error : public std::runtime_error {
public:
    explicit invalid_geometry_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Kernel evaluated on its singularity (rho = 0 in d = 2, 3).
class singular_evaluation_error : public std::runtime_error {
public:
    explicit singular_evaluation_error(const std::string& what)
        : std::runtime_error(what) {}
};

// NaN or other breakdown while filling a layer-operator matrix.
class assembly_error : public std::runtime_error {
public:
    explicit assembly_error(const std::string& what)
        : std::runtime_error(what) {}
};

// A diagonal block failed to factorize: under-resolved mesh or touching
// obstacles.
class factorization_error : public std::runtime_error {
public:
    explicit factorization_error(const std::string& what)
        : std::runtime_error(what) {}
};

// A quantity that must be positive definite came out otherwise. This
// falsifies the discretization, not the math, so it aborts loudly.
class numerical_breakdown_error : public std::runtime_error {
public:
    explicit numerical_breakdown_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Parameter combinations outside the supported range (e.g. r + s < 1).
class unsupported_parameter_error : public std::invalid_argument {
public:
    explicit unsupported_parameter_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Adaptive quadrature ran out of subdivisions. Carries the best estimate so
// callers can still report it.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double best_estimate,
                      double estimated_error)
        : std::runtime_error(what),
          best_estimate(best_estimate),
          estimated_error(estimated_error) {}

    double best_estimate;
    double estimated_error;
};

}  // namespace casim
