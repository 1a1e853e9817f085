#pragma once

#include <cstddef>
#include <vector>

namespace rydline {

/// Monotone (Steffen) piecewise-cubic interpolant with a continuous first
/// derivative. Monotone data never acquires spurious oscillations, which
/// matters when the derivative of the interpolant is consumed downstream.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    /// x must be strictly increasing with at least two samples.
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double value(double x) const;
    double derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    bool contains(double x) const { return x >= x_.front() && x <= x_.back(); }

private:
    std::size_t locate(double x) const;

    std::vector<double> x_, y_, slope_;
};

} // namespace rydline
