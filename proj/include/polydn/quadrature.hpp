#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace polydn {

using Complex = std::complex<double>;

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Cached Newton-iteration rule for the given order (order >= 1).
const GaussRule& gauss_legendre(int order);

// Nodes/weights of a composite rule on [a, b] split into `panels` panels of
// `order`-point Gauss-Legendre each.
struct PanelRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
PanelRule composite_gauss(double a, double b, int panels, int order = 16);

// Integrate f over [a, b] with a composite rule whose resolution is checked
// a posteriori by comparing against the same partition at higher order.
// `oscillation` is the expected phase rate (radians per unit length); it sets
// the initial panel count. Throws QuadratureUnderResolved if the two-grid
// discrepancy never reaches rel_tol * max(|I|, scale).
Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                           double oscillation, double rel_tol = 1e-10, double scale = 0.0);

}  // namespace polydn
