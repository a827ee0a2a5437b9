#include "casim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "casim/errors.hpp"

namespace casim {

GaussRule make_gauss_rule(int n) {
    if (n < 1) throw std::invalid_argument("Gauss rule needs n >= 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = -p1 / pp;
            z += dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = rule.weights[n - 1 - i] =
            2.0 / ((1.0 - z * z) * pp * pp);
    }
    return rule;
}

namespace {

struct Panel {
    double a, b;
    double g15;     // 15-point value
    double err;     // |g15 - g7|
};

const GaussRule& rule15() {
    static const GaussRule r = make_gauss_rule(15);
    return r;
}
const GaussRule& rule7() {
    static const GaussRule r = make_gauss_rule(7);
    return r;
}

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b,
                     long& evals) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double g15 = 0.0, g7 = 0.0;
    const auto& r15 = rule15();
    for (int i = 0; i < 15; ++i) {
        g15 += r15.weights[i] * f(mid + half * r15.nodes[i]);
    }
    const auto& r7 = rule7();
    for (int i = 0; i < 7; ++i) {
        g7 += r7.weights[i] * f(mid + half * r7.nodes[i]);
    }
    evals += 22;
    g15 *= half;
    g7 *= half;
    return Panel{a, b, g15, std::abs(g15 - g7)};
}

// Pairwise summation over panels sorted by left endpoint: the total is a
// function of the final panel set only, not of the refinement order.
double ordered_sum(std::vector<Panel>& panels, bool errors) {
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::vector<double> v(panels.size());
    for (std::size_t i = 0; i < panels.size(); ++i) {
        v[i] = errors ? panels[i].err : panels[i].g15;
    }
    while (v.size() > 1) {
        std::vector<double> next((v.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < v.size(); i += 2) next[i / 2] = v[i] + v[i + 1];
        if (v.size() % 2 == 1) next.back() = v.back();
        v = std::move(next);
    }
    return v.empty() ? 0.0 : v[0];
}

}  // namespace

QuadResult adaptive_gauss(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, int max_panels,
                          bool throw_on_failure) {
    if (!(b > a)) throw std::invalid_argument("adaptive_gauss: need b > a");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("adaptive_gauss: need rel_tol > 0");

    long evals = 0;
    std::vector<Panel> panels;
    const int initial = 4;
    for (int i = 0; i < initial; ++i) {
        const double pa = a + (b - a) * i / initial;
        const double pb = a + (b - a) * (i + 1) / initial;
        panels.push_back(evaluate_panel(f, pa, pb, evals));
    }

    const double abs_floor = std::numeric_limits<double>::min() * 1e4;
    while (static_cast<int>(panels.size()) < max_panels) {
        double total = 0.0, total_err = 0.0;
        for (const auto& p : panels) {
            total += p.g15;
            total_err += p.err;
        }
        if (total_err <= std::max(rel_tol * std::abs(total), abs_floor)) break;

        auto worst = std::max_element(
            panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.err < y.err; });
        const Panel bad = *worst;
        *worst = evaluate_panel(f, bad.a, 0.5 * (bad.a + bad.b), evals);
        panels.push_back(evaluate_panel(f, 0.5 * (bad.a + bad.b), bad.b, evals));
    }

    QuadResult res;
    res.value = ordered_sum(panels, false);
    res.abs_error = ordered_sum(panels, true);
    res.evaluations = evals;
    res.converged =
        res.abs_error <= std::max(rel_tol * std::abs(res.value), abs_floor);
    if (!res.converged && throw_on_failure) {
        throw convergence_error("adaptive_gauss: tolerance not met within " +
                                    std::to_string(max_panels) + " panels",
                                res.value, res.abs_error);
    }
    return res;
}

}  // namespace casim
