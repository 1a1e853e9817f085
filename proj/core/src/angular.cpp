#include "rydline/angular.hpp"

#include <cmath>
#include <stdexcept>

namespace rydline {

double assoc_legendre_norm(int l, int m, double x) {
    if (m < 0 || l < 0) throw std::invalid_argument("assoc_legendre_norm: need l >= m >= 0");
    if (m > l) return 0.0;
    if (x < -1.0 || x > 1.0)
        throw std::invalid_argument("assoc_legendre_norm: argument outside [-1, 1]");

    // Seed Pbar_mm = (-1)^m sqrt((2m+1)/2 * (2m-1)!!/(2m)!!) (1-x^2)^{m/2},
    // then the normalization-preserving upward recurrence in l.
    double pmm = std::sqrt(0.5);
    if (m > 0) {
        const double s2 = (1.0 - x) * (1.0 + x);
        double ratio = 1.0;
        for (int i = 1; i <= m; ++i) ratio *= (2.0 * i - 1.0) / (2.0 * i);
        pmm = ((m % 2) ? -1.0 : 1.0) * std::sqrt((2.0 * m + 1.0) / 2.0 * ratio) *
              std::pow(s2, 0.5 * m);
    }
    if (l == m) return pmm;

    double pm1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
    if (l == m + 1) return pm1;

    double pl = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        const double a =
            std::sqrt((4.0 * ll * ll - 1.0) / (static_cast<double>(ll) * ll - static_cast<double>(m) * m));
        const double b = std::sqrt(((2.0 * ll + 1.0) * ((ll - 1.0) * (ll - 1.0) - static_cast<double>(m) * m)) /
                                   ((2.0 * ll - 3.0) * (static_cast<double>(ll) * ll - static_cast<double>(m) * m)));
        pl = a * x * pm1 - b * pmm;
        pmm = pm1;
        pm1 = pl;
    }
    return pl;
}

double cos_theta_coupling(int l, int m) {
    if (l < 0 || std::abs(m) > l) throw std::invalid_argument("cos_theta_coupling: invalid l, m");
    const double l1 = l + 1.0;
    return std::sqrt((l1 * l1 - static_cast<double>(m) * m) / ((2.0 * l + 1.0) * (2.0 * l + 3.0)));
}

} // namespace rydline
