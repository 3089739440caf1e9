#include "polydn/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "polydn/errors.hpp"

namespace polydn {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double scale_of(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& z : v) s = std::max(s, std::abs(z));
    return std::max(s, 1.0);
}

}  // namespace

Polygon build_polygon(std::vector<Complex> vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 3) throw TooFewVertices("build_polygon: need at least 3 vertices, got " + std::to_string(n));

    const double scale = scale_of(vertices);
    const double edge_tol = 1e-12 * scale;

    double area2 = 0.0;
    for (int i = 0; i < n; ++i) area2 += cross(vertices[i], vertices[(i + 1) % n]);
    if (area2 < 0.0) std::reverse(vertices.begin(), vertices.end());

    for (int i = 0; i < n; ++i) {
        if (std::abs(vertices[(i + 1) % n] - vertices[i]) < edge_tol)
            throw DegenerateEdge("build_polygon: edge " + std::to_string(i + 1) + " has near-zero length");
    }
    // strict convexity, counterclockwise: every consecutive cross product positive
    const double conv_tol = 1e-12 * scale * scale;
    for (int i = 0; i < n; ++i) {
        const Complex e0 = vertices[(i + 1) % n] - vertices[i];
        const Complex e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
        if (cross(e0, e1) <= conv_tol)
            throw NonConvex("build_polygon: interior angle at vertex " + std::to_string((i + 1) % n + 1) +
                            " is not strictly convex");
    }

    Polygon p;
    p.vertices = std::move(vertices);
    p.alphas.resize(n);
    p.midpoints.resize(n);
    p.half_lengths.resize(n);
    p.delta.resize(n, n);
    for (int i = 0; i < n; ++i) {
        const Complex e = p.vertices[(i + 1) % n] - p.vertices[i];
        p.alphas[i] = std::arg(e);
        p.midpoints[i] = (p.vertices[i] + p.vertices[(i + 1) % n]) / 2.0;
        p.half_lengths[i] = std::abs(e) / 2.0;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.delta(i, j) = p.alphas[i] - p.alphas[j];
    return p;
}

double Polygon::diameter() const {
    double d = 0.0;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            d = std::max(d, std::abs(vertices[i] - vertices[j]));
    return d;
}

Complex edge_point(const Polygon& poly, int i, double tau) {
    const int k = poly.mod(i);
    const double s = poly.half_lengths[static_cast<size_t>(k)];
    if (std::abs(tau) > s * (1.0 + 1e-12))
        throw OutOfRange("edge_point: |tau| exceeds half-length of edge " + std::to_string(k + 1));
    return poly.midpoints[static_cast<size_t>(k)] +
           tau * std::polar(1.0, poly.alphas[static_cast<size_t>(k)]);
}

Complex outward_normal(const Polygon& poly, int i) {
    const int k = poly.mod(i);
    return Complex(0.0, -1.0) * std::polar(1.0, poly.alphas[static_cast<size_t>(k)]);
}

Polygon transform_polygon(const Polygon& poly, double angle, Complex shift) {
    std::vector<Complex> v(poly.vertices.size());
    const Complex rot = std::polar(1.0, angle);
    for (size_t i = 0; i < v.size(); ++i) v[i] = rot * poly.vertices[i] + shift;
    return build_polygon(std::move(v));
}

double line_distance(const Polygon& poly, int i, Complex z) {
    const int k = poly.mod(i);
    const Complex w = (z - poly.midpoints[static_cast<size_t>(k)]) *
                      std::polar(1.0, -poly.alphas[static_cast<size_t>(k)]);
    return w.imag();
}

double boundary_distance(const Polygon& poly, Complex z) {
    double d = std::numeric_limits<double>::infinity();
    const int n = poly.n();
    for (int i = 0; i < n; ++i) {
        const Complex a = poly.vertices[static_cast<size_t>(i)];
        const Complex b = poly.vertices[static_cast<size_t>((i + 1) % n)];
        const Complex e = b - a;
        const double t = std::clamp(((z - a) * std::conj(e)).real() / std::norm(e), 0.0, 1.0);
        d = std::min(d, std::abs(z - (a + t * e)));
    }
    return d;
}

bool is_interior(const Polygon& poly, Complex z) {
    for (int i = 0; i < poly.n(); ++i)
        if (line_distance(poly, i, z) <= 0.0) return false;
    return true;
}

}  // namespace polydn
