#include "polydn/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "polydn/errors.hpp"

namespace polydn {

namespace {

GaussRule make_rule(int n) {
    // Newton iteration on Legendre polynomials, exploiting node symmetry.
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        r.nodes[i - 1] = -z;
        r.nodes[n - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * pp * pp);
        r.weights[i - 1] = w;
        r.weights[n - i] = w;
    }
    return r;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
    return it->second;
}

PanelRule composite_gauss(double a, double b, int panels, int order) {
    if (panels < 1 || order < 1) throw InvalidResolution("composite_gauss: panels and order must be >= 1");
    const GaussRule& g = gauss_legendre(order);
    PanelRule r;
    r.nodes.reserve(static_cast<size_t>(panels) * order);
    r.weights.reserve(static_cast<size_t>(panels) * order);
    const double h = (b - a) / panels;
    for (int k = 0; k < panels; ++k) {
        const double c0 = a + k * h;
        for (int q = 0; q < order; ++q) {
            r.nodes.push_back(c0 + (g.nodes[q] + 1.0) * h / 2.0);
            r.weights.push_back(g.weights[q] * std::abs(h) / 2.0);
        }
    }
    return r;
}

Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                           double oscillation, double rel_tol, double scale) {
    auto eval = [&](int panels, int order) {
        PanelRule r = composite_gauss(a, b, panels, order);
        Complex acc = 0.0;
        for (size_t q = 0; q < r.nodes.size(); ++q) acc += r.weights[q] * f(r.nodes[q]);
        return acc;
    };
    // ~4 radians of phase per 16-point panel keeps Gauss-Legendre at machine accuracy
    int panels = std::max(2, static_cast<int>(std::ceil(std::abs(b - a) * oscillation / 4.0)));
    for (int attempt = 0; attempt < 5; ++attempt) {
        const Complex coarse = eval(panels, 16);
        const Complex fine = eval(panels, 24);
        const double err = std::abs(fine - coarse);
        if (err <= rel_tol * std::max(std::abs(fine), scale)) return fine;
        panels *= 2;
    }
    throw QuadratureUnderResolved("integrate_adaptive: two-grid estimate above tolerance");
}

}  // namespace polydn
