#include "casim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "casim/errors.hpp"

namespace casim {

namespace {

constexpr int kSamplesPerCurve = 512;  // dense separation-scan resolution
constexpr int kRefineLevels = 6;       // local grid refinements (16x16, /8 each)

std::vector<Vec2> boundary_samples(const Obstacle& ob, int n) {
    std::vector<Vec2> out;
    if (const auto* pt = std::get_if<Point1D>(&ob.shape)) {
        out.push_back({pt->position, 0.0});
        return out;
    }
    const auto& c = std::get<Curve2D>(ob.shape);
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        out.push_back(c.point(2.0 * M_PI * i / n));
    }
    return out;
}

double dist(Vec2 a, Vec2 b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

// Minimum boundary distance between two obstacles: dense parameter scan
// followed by shrinking local grid refinement around the best pair.
double pair_separation(const Obstacle& a, const Obstacle& b) {
    const auto sa = boundary_samples(a, kSamplesPerCurve);
    const auto sb = boundary_samples(b, kSamplesPerCurve);

    double best = std::numeric_limits<double>::infinity();
    std::size_t ia = 0, ib = 0;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        for (std::size_t j = 0; j < sb.size(); ++j) {
            const double d = dist(sa[i], sb[j]);
            if (d < best) {
                best = d;
                ia = i;
                ib = j;
            }
        }
    }

    const auto* ca = std::get_if<Curve2D>(&a.shape);
    const auto* cb = std::get_if<Curve2D>(&b.shape);
    if (!ca && !cb) return best;  // two points: exact already

    double ta = 2.0 * M_PI * ia / sa.size();
    double tb = 2.0 * M_PI * ib / sb.size();
    double ha = ca ? 2.0 * M_PI / kSamplesPerCurve : 0.0;
    double hb = cb ? 2.0 * M_PI / kSamplesPerCurve : 0.0;
    for (int level = 0; level < kRefineLevels; ++level) {
        double bta = ta, btb = tb;
        for (int i = -8; i <= 8; ++i) {
            for (int j = -8; j <= 8; ++j) {
                const double u = ta + ha * i / 8.0;
                const double v = tb + hb * j / 8.0;
                const Vec2 pa = ca ? ca->point(u) : sa[0];
                const Vec2 pb = cb ? cb->point(v) : sb[0];
                const double d = dist(pa, pb);
                if (d < best) {
                    best = d;
                    bta = u;
                    btb = v;
                }
            }
        }
        ta = bta;
        tb = btb;
        ha /= 8.0;
        hb /= 8.0;
    }
    return best;
}

// Winding-number containment test on the sampled polygon; catches one curve
// enclosing another, which a boundary-distance check alone would miss.
bool curve_contains(const Curve2D& outer, Vec2 p) {
    double winding = 0.0;
    Vec2 prev = outer.point(0.0);
    for (int i = 1; i <= kSamplesPerCurve; ++i) {
        const Vec2 cur = outer.point(2.0 * M_PI * i / kSamplesPerCurve);
        const double x1 = prev[0] - p[0], y1 = prev[1] - p[1];
        const double x2 = cur[0] - p[0], y2 = cur[1] - p[1];
        winding += std::atan2(x1 * y2 - y1 * x2, x1 * x2 + y1 * y2);
        prev = cur;
    }
    return std::abs(winding) > M_PI;  // |winding| ~ 2pi inside, ~0 outside
}

Vec2 reference_point(const Obstacle& ob) {
    if (const auto* pt = std::get_if<Point1D>(&ob.shape)) {
        return {pt->position, 0.0};
    }
    return std::get<Curve2D>(ob.shape).point(0.0);
}

}  // namespace

Vec2 Curve2D::point(double t) const {
    double x = 0.0, y = 0.0;
    for (std::size_t k = 0; k < cos_x.size(); ++k) x += cos_x[k] * std::cos((k + 1) * t);
    for (std::size_t k = 0; k < sin_x.size(); ++k) x += sin_x[k] * std::sin((k + 1) * t);
    for (std::size_t k = 0; k < cos_y.size(); ++k) y += cos_y[k] * std::cos((k + 1) * t);
    for (std::size_t k = 0; k < sin_y.size(); ++k) y += sin_y[k] * std::sin((k + 1) * t);
    return {center[0] + scale * x, center[1] + scale * y};
}

Vec2 Curve2D::derivative(double t) const {
    double x = 0.0, y = 0.0;
    for (std::size_t k = 0; k < cos_x.size(); ++k) x -= (k + 1) * cos_x[k] * std::sin((k + 1) * t);
    for (std::size_t k = 0; k < sin_x.size(); ++k) x += (k + 1) * sin_x[k] * std::cos((k + 1) * t);
    for (std::size_t k = 0; k < cos_y.size(); ++k) y -= (k + 1) * cos_y[k] * std::sin((k + 1) * t);
    for (std::size_t k = 0; k < sin_y.size(); ++k) y += (k + 1) * sin_y[k] * std::cos((k + 1) * t);
    return {scale * x, scale * y};
}

double Curve2D::speed(double t) const {
    const Vec2 d = derivative(t);
    return std::hypot(d[0], d[1]);
}

int Curve2D::max_harmonic() const {
    return static_cast<int>(std::max({cos_x.size(), sin_x.size(), cos_y.size(), sin_y.size()}));
}

ObstacleSet::ObstacleSet(int dimension, std::vector<Obstacle> obstacles)
    : dimension_(dimension), obstacles_(std::move(obstacles)), diameter_(0.0) {
    if (dimension_ != 1 && dimension_ != 2) {
        throw invalid_geometry_error("dimension must be 1 or 2");
    }
    if (obstacles_.empty()) {
        throw invalid_geometry_error("obstacle set must contain at least one obstacle");
    }
    for (const auto& ob : obstacles_) {
        const bool is_point = std::holds_alternative<Point1D>(ob.shape);
        if (dimension_ == 1 && !is_point) {
            throw invalid_geometry_error("d=1 obstacles must be points");
        }
        if (dimension_ == 2 && is_point) {
            throw invalid_geometry_error("d=2 obstacles must be curves");
        }
        if (const auto* c = std::get_if<Curve2D>(&ob.shape)) {
            if (c->scale <= 0.0) {
                throw invalid_geometry_error("curve scale must be positive");
            }
            for (int i = 0; i < kSamplesPerCurve; ++i) {
                if (!(c->speed(2.0 * M_PI * i / kSamplesPerCurve) > 0.0)) {
                    throw invalid_geometry_error(
                        "curve '" + ob.label + "' has vanishing derivative");
                }
            }
        }
    }

    // Configuration diameter from the coarse samples.
    std::vector<Vec2> all;
    for (const auto& ob : obstacles_) {
        auto s = boundary_samples(ob, 64);
        all.insert(all.end(), s.begin(), s.end());
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            diameter_ = std::max(diameter_, dist(all[i], all[j]));
        }
    }
    if (diameter_ <= 0.0) diameter_ = 1.0;  // single obstacle: scale-free

    const double tol = 1e-9 * diameter_;
    for (std::size_t i = 0; i < obstacles_.size(); ++i) {
        for (std::size_t j = i + 1; j < obstacles_.size(); ++j) {
            const double sep = pair_separation(obstacles_[i], obstacles_[j]);
            if (!(sep > tol)) {
                throw invalid_geometry_error(
                    "obstacles '" + obstacles_[i].label + "' and '" +
                    obstacles_[j].label + "' overlap or touch (separation " +
                    std::to_string(sep) + ")");
            }
            const auto* ci = std::get_if<Curve2D>(&obstacles_[i].shape);
            const auto* cj = std::get_if<Curve2D>(&obstacles_[j].shape);
            if (ci && cj) {
                if (curve_contains(*ci, reference_point(obstacles_[j])) ||
                    curve_contains(*cj, reference_point(obstacles_[i]))) {
                    throw invalid_geometry_error(
                        "obstacle '" + obstacles_[i].label + "' encloses '" +
                        obstacles_[j].label + "' (or vice versa)");
                }
            }
        }
    }
}

ObstacleSet make_points_1d(const std::vector<double>& positions) {
    if (positions.size() < 2) {
        throw invalid_geometry_error("need at least two 1D points");
    }
    for (std::size_t i = 1; i < positions.size(); ++i) {
        if (!(positions[i] > positions[i - 1])) {
            throw invalid_geometry_error("1D positions must be strictly increasing");
        }
    }
    std::vector<Obstacle> obs;
    obs.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        obs.push_back({"p" + std::to_string(i), Point1D{positions[i]}});
    }
    return ObstacleSet(1, std::move(obs));
}

Obstacle make_circle(Vec2 center, double radius, const std::string& label) {
    if (!(radius > 0.0)) {
        throw invalid_geometry_error("circle radius must be positive");
    }
    Curve2D c;
    c.cos_x = {radius};
    c.sin_y = {radius};
    c.center = center;
    c.scale = 1.0;
    return Obstacle{label, c};
}

double min_separation(const ObstacleSet& set) {
    if (set.size() < 2) {
        throw invalid_geometry_error("min_separation needs at least two obstacles");
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            best = std::min(best, pair_separation(set.obstacle(i), set.obstacle(j)));
        }
    }
    return best;
}

ObstacleSet scale_set(const ObstacleSet& set, double sigma) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("scale factor must be positive");
    }
    std::vector<Obstacle> obs = set.obstacles();
    for (auto& ob : obs) {
        if (auto* pt = std::get_if<Point1D>(&ob.shape)) {
            pt->position *= sigma;
        } else {
            auto& c = std::get<Curve2D>(ob.shape);
            c.center[0] *= sigma;
            c.center[1] *= sigma;
            c.scale *= sigma;
        }
    }
    return ObstacleSet(set.dimension(), std::move(obs));
}

ObstacleSet rigid_transform(const ObstacleSet& set, double angle, Vec2 shift) {
    if (set.dimension() == 1 && angle != 0.0) {
        throw std::invalid_argument("rotation is undefined for d=1");
    }
    const double c = std::cos(angle), s = std::sin(angle);
    std::vector<Obstacle> obs = set.obstacles();
    for (auto& ob : obs) {
        if (auto* pt = std::get_if<Point1D>(&ob.shape)) {
            pt->position += shift[0];
            continue;
        }
        auto& cv = std::get<Curve2D>(ob.shape);
        // Rotate the center and mix the coordinate harmonics.
        const Vec2 ctr = cv.center;
        cv.center = {c * ctr[0] - s * ctr[1] + shift[0],
                     s * ctr[0] + c * ctr[1] + shift[1]};
        const std::size_t kmax = static_cast<std::size_t>(cv.max_harmonic());
        cv.cos_x.resize(kmax, 0.0);
        cv.sin_x.resize(kmax, 0.0);
        cv.cos_y.resize(kmax, 0.0);
        cv.sin_y.resize(kmax, 0.0);
        for (std::size_t k = 0; k < kmax; ++k) {
            const double cx = cv.cos_x[k], sx = cv.sin_x[k];
            const double cy = cv.cos_y[k], sy = cv.sin_y[k];
            cv.cos_x[k] = c * cx - s * cy;
            cv.sin_x[k] = c * sx - s * sy;
            cv.cos_y[k] = s * cx + c * cy;
            cv.sin_y[k] = s * sx + c * sy;
        }
    }
    return ObstacleSet(set.dimension(), std::move(obs));
}

}  // namespace casim
