#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rydline {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(std::size_t n);

/// Gauss-Legendre nodes/weights composited over the panels defined by
/// consecutive entries of `edges` (strictly increasing).
QuadratureRule gauss_panels(const std::vector<double>& edges, std::size_t points_per_panel);

/// Composite Simpson over [a, b] with n (even) intervals.
double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n);

/// Simpson for uniformly sampled values (odd count; falls back to a
/// trapezoid closure for even counts).
double simpson_samples(const std::vector<double>& y, double h);

} // namespace rydline
