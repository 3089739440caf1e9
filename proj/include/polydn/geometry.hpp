#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace polydn {

using Complex = std::complex<double>;

// Convex polygon with the derived per-edge chart data used everywhere else:
// edge i runs from vertices[i] to vertices[i+1] (cyclic, counterclockwise),
// alpha[i] is its direction angle in (-pi, pi], midpoint[i] its midpoint and
// half_length[i] half its length, so that the local chart is
//   psi_i(tau) = midpoint[i] + tau * exp(i*alpha[i]),  tau in [-sigma_i, sigma_i].
// delta(i, j) = alpha[i] - alpha[j]. Immutable after construction.
struct Polygon {
    std::vector<Complex> vertices;
    std::vector<double> alphas;
    std::vector<Complex> midpoints;
    std::vector<double> half_lengths;
    Eigen::MatrixXd delta;

    int n() const { return static_cast<int>(vertices.size()); }
    Complex vertex(int i) const { return vertices[static_cast<size_t>(mod(i))]; }
    double diameter() const;

    int mod(int i) const {
        const int nn = n();
        return ((i % nn) + nn) % nn;
    }
};

// Validates and normalizes the input (>= 3 distinct points, strictly convex;
// clockwise input is reversed). Throws TooFewVertices, DegenerateEdge, NonConvex.
Polygon build_polygon(std::vector<Complex> vertices);

// psi_i(tau); throws OutOfRange when |tau| > sigma_i (with a small slack for rounding).
Complex edge_point(const Polygon& poly, int i, double tau);

// Unit outward normal -i * exp(i*alpha_i) of the counterclockwise boundary.
Complex outward_normal(const Polygon& poly, int i);

// Rigid motion z -> exp(i*angle) * z + shift applied to every vertex.
Polygon transform_polygon(const Polygon& poly, double angle, Complex shift);

// Signed distance of z above the line through edge i (positive strictly inside).
double line_distance(const Polygon& poly, int i, Complex z);

// Distance from z to the boundary (minimum over closed edge segments).
double boundary_distance(const Polygon& poly, Complex z);

bool is_interior(const Polygon& poly, Complex z);

}  // namespace polydn
