#include "rydline/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydline {

QuadratureRule gauss_legendre(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on Legendre polynomials, Chebyshev starting guesses.
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

QuadratureRule gauss_panels(const std::vector<double>& edges, std::size_t points_per_panel) {
    if (edges.size() < 2) throw std::invalid_argument("gauss_panels: need at least one panel");
    const QuadratureRule base = gauss_legendre(points_per_panel);
    QuadratureRule rule;
    rule.nodes.reserve((edges.size() - 1) * points_per_panel);
    rule.weights.reserve((edges.size() - 1) * points_per_panel);
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        const double a = edges[p], b = edges[p + 1];
        if (!(b > a)) throw std::invalid_argument("gauss_panels: edges must be increasing");
        for (std::size_t i = 0; i < points_per_panel; ++i) {
            rule.nodes.push_back(0.5 * (b - a) * base.nodes[i] + 0.5 * (a + b));
            rule.weights.push_back(0.5 * (b - a) * base.weights[i]);
        }
    }
    return rule;
}

double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n) {
    if (n < 2) n = 2;
    if (n % 2) ++n;
    const double h = (b - a) / static_cast<double>(n);
    double sum = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) sum += f(a + h * i) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

double simpson_samples(const std::vector<double>& y, double h) {
    const std::size_t n = y.size();
    if (n < 2) return 0.0;
    std::size_t m = (n % 2) ? n : n - 1; // largest odd prefix
    double sum = y[0] + y[m - 1];
    for (std::size_t i = 1; i + 1 < m; ++i) sum += y[i] * (i % 2 ? 4.0 : 2.0);
    double out = sum * h / 3.0;
    if (m != n) out += 0.5 * h * (y[n - 2] + y[n - 1]);
    return out;
}

} // namespace rydline
