#include "rydline/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rydline {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw std::invalid_argument("interpolation: need >= 2 samples with matching sizes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::invalid_argument("interpolation: abscissae must be strictly increasing");

    // Steffen (1990) slopes: local, monotonicity-preserving.
    slope_.resize(n);
    std::vector<double> h(n - 1), s(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        s[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    if (n == 2) {
        slope_[0] = slope_[1] = s[0];
        return;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double p = (s[i - 1] * h[i] + s[i] * h[i - 1]) / (h[i - 1] + h[i]);
        if (s[i - 1] * s[i] <= 0.0)
            slope_[i] = 0.0;
        else
            slope_[i] = std::copysign(
                std::min({std::abs(p), 2.0 * std::abs(s[i - 1]), 2.0 * std::abs(s[i])}), p);
    }
    auto end_slope = [](double s0, double s1, double h0, double h1) {
        double p = s0 * (1.0 + h0 / (h0 + h1)) - s1 * (h0 / (h0 + h1));
        if (p * s0 <= 0.0) return 0.0;
        if (std::abs(p) > 2.0 * std::abs(s0)) return 2.0 * s0;
        return p;
    };
    slope_[0] = end_slope(s[0], s[1], h[0], h[1]);
    slope_[n - 1] = end_slope(s[n - 2], s[n - 3], h[n - 2], h[n - 3]);
}

std::size_t MonotoneCubic::locate(double x) const {
    if (!contains(x))
        throw std::out_of_range("interpolation: abscissa outside table range");
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin());
    if (i > 0) --i;
    if (i >= x_.size() - 1) i = x_.size() - 2;
    return i;
}

double MonotoneCubic::value(double x) const {
    const std::size_t i = locate(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double a = y_[i], b = y_[i + 1], ma = slope_[i] * h, mb = slope_[i + 1] * h;
    const double t2 = t * t, t3 = t2 * t;
    return a * (2 * t3 - 3 * t2 + 1) + ma * (t3 - 2 * t2 + t) + b * (-2 * t3 + 3 * t2) +
           mb * (t3 - t2);
}

double MonotoneCubic::derivative(double x) const {
    const std::size_t i = locate(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double a = y_[i], b = y_[i + 1], ma = slope_[i] * h, mb = slope_[i + 1] * h;
    const double t2 = t * t;
    return (a * (6 * t2 - 6 * t) + ma * (3 * t2 - 4 * t + 1) + b * (-6 * t2 + 6 * t) +
            mb * (3 * t2 - 2 * t)) /
           h;
}

} // namespace rydline
