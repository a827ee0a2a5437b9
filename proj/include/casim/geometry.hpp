#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace casim {

using Vec2 = std::array<double, 2>;

// A 1D obstacle: a single point. Its boundary is the point itself.
struct Point1D {
    double position = 0.0;
};

// Closed smooth curve given by trigonometric polynomials
//   x(t) = center_x + scale * sum_k [ cos_x[k-1] cos(kt) + sin_x[k-1] sin(kt) ]
// and likewise for y, t in [0, 2pi). The finite Fourier description keeps the
// curve analytic and makes arc-length elements exact.
struct Curve2D {
    std::vector<double> cos_x, sin_x;  // harmonics k = 1, 2, ...
    std::vector<double> cos_y, sin_y;
    Vec2 center{0.0, 0.0};
    double scale = 1.0;

    Vec2 point(double t) const;
    Vec2 derivative(double t) const;
    double speed(double t) const;  // |x'(t)|
    int max_harmonic() const;
};

struct Obstacle {
    std::string label;
    std::variant<Point1D, Curve2D> shape;
};

// Ordered collection of pairwise disjoint obstacles in R^d, d in {1, 2}.
// Immutable after construction; construction validates separation.
class ObstacleSet {
public:
    ObstacleSet(int dimension, std::vector<Obstacle> obstacles);

    int dimension() const { return dimension_; }
    std::size_t size() const { return obstacles_.size(); }
    const Obstacle& obstacle(std::size_t j) const { return obstacles_.at(j); }
    const std::vector<Obstacle>& obstacles() const { return obstacles_; }

    // Configuration diameter estimate (max pairwise distance of boundary
    // samples). Used for the overlap-rejection tolerance.
    double diameter() const { return diameter_; }

private:
    int dimension_;
    std::vector<Obstacle> obstacles_;
    double diameter_;
};

ObstacleSet make_points_1d(const std::vector<double>& positions);

Obstacle make_circle(Vec2 center, double radius, const std::string& label = "");

// Minimum Euclidean distance between boundaries over all obstacle pairs.
// Computed on a dense sample grid (512 parameters per curve) followed by
// local grid refinement; exact for 1D points. Requires N >= 2.
double min_separation(const ObstacleSet& set);

ObstacleSet scale_set(const ObstacleSet& set, double sigma);

// Rigid motion of the whole configuration: rotation by `angle` about the
// origin (d = 2 only; must be 0 for d = 1) followed by translation.
ObstacleSet rigid_transform(const ObstacleSet& set, double angle, Vec2 shift);

}  // namespace casim
