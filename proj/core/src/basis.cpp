#include "rydline/basis.hpp"

#include "rydline/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydline {

double channel_energy(const RydbergChannel& c) {
    if (!c.valid()) throw std::invalid_argument("channel_energy: invalid channel");
    const double nu = c.nu();
    return -1.0 / (2.0 * nu * nu);
}

double density_of_states(double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("density_of_states: nu must be positive");
    return nu * nu * nu;
}

LocalMomentum local_momentum(int n, double R) {
    if (n < 1) throw std::invalid_argument("local_momentum: n must be positive");
    const double R_c = 2.0 * n * n;
    if (!(R > 0.0)) throw std::domain_error("local_momentum: R must be positive");
    if (R > R_c) throw std::domain_error("local_momentum: beyond classical turning point");
    const double arg = 2.0 / R - 1.0 / (static_cast<double>(n) * n);
    return {std::sqrt(std::max(arg, 0.0)), R_c};
}

namespace {

constexpr double store_step_target = 0.05;

// u'' = f(r) u for the radial Coulomb problem at energy -1/(2 nu^2)
inline double radial_f(int l, double nu, double r) {
    return static_cast<double>(l) * (l + 1) / (r * r) - 2.0 / r + 1.0 / (nu * nu);
}

} // namespace

RadialFunction::RadialFunction(RydbergChannel channel, double r_max, double step)
    : channel_(channel) {
    if (!channel.valid()) throw std::invalid_argument("radial_function: invalid channel");
    const double n2 = static_cast<double>(channel.n) * channel.n;
    if (r_max < 3.0 * n2)
        throw std::invalid_argument("radial_function: r_max must cover >= 3 n^2");
    if (!(step > 0.0)) throw std::invalid_argument("radial_function: step must be positive");
    // resolve the shortest local wavelength at the orbit scale by >= 10 points
    const double k_orbit = std::sqrt(2.0) / std::sqrt(std::max(1.0, 0.1 * n2));
    if (step > 2.0 * std::numbers::pi / k_orbit / 10.0)
        throw std::invalid_argument("radial_function: grid too coarse for this manifold");

    const double h = step;
    const double nu = channel.nu();
    const int l = channel.l;
    const std::size_t npts = static_cast<std::size_t>(std::floor(r_max / h));
    std::vector<double> u(npts); // u[i] at r = (i+1) h

    // inward Numerov from the classically forbidden tail
    auto f_at = [&](std::size_t i) { return radial_f(l, nu, (i + 1) * h); };
    const double c = h * h / 12.0;
    u[npts - 1] = 1e-40;
    const double kappa = std::sqrt(std::max(f_at(npts - 1), 1e-12));
    u[npts - 2] = u[npts - 1] * std::exp(kappa * h);
    double fp = f_at(npts - 1), f0 = f_at(npts - 2);
    for (std::size_t i = npts - 2; i > 0; --i) {
        const double fm = f_at(i - 1);
        u[i - 1] =
            (2.0 * u[i] * (1.0 + 5.0 * c * f0) - u[i + 1] * (1.0 - c * fp)) / (1.0 - c * fm);
        fp = f0;
        f0 = fm;
        if (std::abs(u[i - 1]) > 1e200)
            for (std::size_t j = i - 1; j < npts; ++j) u[j] *= 1e-100;
    }

    // Quantum-defect channels diverge toward the origin (irregular Coulomb
    // behavior); truncate at the |u| minimum inside the inner forbidden zone.
    std::size_t first = 0;
    std::size_t inner_allowed = npts;
    for (std::size_t i = 0; i < npts; ++i)
        if (f_at(i) < 0.0) {
            inner_allowed = i;
            break;
        }
    if (inner_allowed > 0 && inner_allowed < npts) {
        std::size_t imin = inner_allowed;
        for (std::size_t i = inner_allowed; i-- > 0;)
            if (std::abs(u[i]) < std::abs(u[imin])) imin = i;
        if (std::abs(u[0]) > 10.0 * std::abs(u[imin])) first = imin;
    }
    for (std::size_t i = 0; i < first; ++i) u[i] = 0.0;

    // normalize on the fine grid
    std::vector<double> u2(npts);
    for (std::size_t i = 0; i < npts; ++i) u2[i] = u[i] * u[i];
    const double norm2 = simpson_samples(u2, h);
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
        throw std::runtime_error("radial_function: normalization failed");
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& v : u) v *= scale;

    // derivative from the ODE-corrected centered difference
    std::vector<double> up(npts);
    for (std::size_t i = 1; i + 1 < npts; ++i) {
        const double fpp = f_at(i + 1), fmm = f_at(i - 1);
        up[i] = (u[i + 1] - u[i - 1]) / (2.0 * h) -
                h * (fpp * u[i + 1] - fmm * u[i - 1]) / 12.0;
    }
    up[0] = (u[1] - u[0]) / h;
    up[npts - 1] = (u[npts - 1] - u[npts - 2]) / h;

    // strided storage; Hermite interpolation recovers intermediate values
    const std::size_t stride = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::round(store_step_target / h)));
    h_ = stride * h;
    r0_ = h;
    for (std::size_t i = 0; i < npts; i += stride) {
        u_.push_back(u[i]);
        up_.push_back(up[i]);
    }

    double umax = 0.0;
    for (double v : u_) umax = std::max(umax, std::abs(v));
    double prev = 0.0;
    for (double v : u_) {
        if (std::abs(v) < 1e-9 * umax) continue;
        if (prev != 0.0 && v * prev < 0.0) ++nodes_;
        prev = v;
    }
}

double RadialFunction::value(double r) const {
    if (r < r0_ || r > r_outer()) return 0.0;
    const std::size_t i =
        std::min(static_cast<std::size_t>((r - r0_) / h_), u_.size() - 2);
    const double t = (r - (r0_ + i * h_)) / h_;
    const double a = u_[i], b = u_[i + 1], ma = up_[i] * h_, mb = up_[i + 1] * h_;
    const double t2 = t * t, t3 = t2 * t;
    return a * (2 * t3 - 3 * t2 + 1) + ma * (t3 - 2 * t2 + t) + b * (-2 * t3 + 3 * t2) +
           mb * (t3 - t2);
}

double RadialFunction::derivative(double r) const {
    if (r < r0_ || r > r_outer()) return 0.0;
    const std::size_t i =
        std::min(static_cast<std::size_t>((r - r0_) / h_), u_.size() - 2);
    const double t = (r - (r0_ + i * h_)) / h_;
    const double a = u_[i], b = u_[i + 1], ma = up_[i] * h_, mb = up_[i + 1] * h_;
    const double t2 = t * t;
    return (a * (6 * t2 - 6 * t) + ma * (3 * t2 - 4 * t + 1) + b * (-6 * t2 + 6 * t) +
            mb * (3 * t2 - 2 * t)) /
           h_;
}

double RadialFunction::overlap(const RadialFunction& other) const {
    if (std::abs(h_ - other.h_) > 1e-12 || std::abs(r0_ - other.r0_) > 1e-12)
        throw std::invalid_argument("overlap: functions live on different grids");
    const std::size_t npts = std::min(u_.size(), other.u_.size());
    std::vector<double> prod(npts);
    for (std::size_t i = 0; i < npts; ++i) prod[i] = u_[i] * other.u_[i];
    return simpson_samples(prod, h_);
}

double RadialFunction::radial_dipole(const RadialFunction& other) const {
    if (std::abs(h_ - other.h_) > 1e-12 || std::abs(r0_ - other.r0_) > 1e-12)
        throw std::invalid_argument("radial_dipole: functions live on different grids");
    const std::size_t npts = std::min(u_.size(), other.u_.size());
    std::vector<double> prod(npts);
    for (std::size_t i = 0; i < npts; ++i) prod[i] = u_[i] * other.u_[i] * (r0_ + i * h_);
    return simpson_samples(prod, h_);
}

Basis Basis::single_manifold(int n, int m, double r_max_factor, double step) {
    if (n < 1 || std::abs(m) >= n)
        throw std::invalid_argument("single_manifold: need |m| < n");
    Basis b;
    b.n_ref_ = n;
    b.m_ = m;
    const double r_max = r_max_factor * n * n;
    for (int l = std::abs(m); l < n; ++l) {
        RydbergChannel c{n, l, m, 0.0};
        b.channels_.push_back(c);
        b.radials_.push_back(std::make_shared<RadialFunction>(c, r_max, step));
    }
    return b;
}

Basis Basis::with_defects(const SpeciesData& species, int n, int m, double step) {
    if (n < 1 || std::abs(m) >= n)
        throw std::invalid_argument("with_defects: need |m| < n");
    Basis b;
    b.n_ref_ = n;
    b.m_ = m;
    std::vector<RydbergChannel> channels;
    for (int l = std::abs(m); l < n; ++l)
        channels.push_back({n, l, m, species.quantum_defect(l)});
    // defect-split channels from nearby manifolds within one spacing of nu_ref
    const int l_defect_max = static_cast<int>(species.quantum_defects.size()) - 1;
    for (int np = n - 1; np <= n + 4; ++np) {
        if (np == n || np < 1) continue;
        for (int l = std::abs(m); l <= std::min(l_defect_max, np - 1); ++l) {
            const double mu = species.quantum_defect(l);
            if (mu == 0.0) continue;
            const double nu = np - mu;
            if (std::abs(nu - n) < 1.0) channels.push_back({np, l, m, mu});
        }
    }
    int n_max = n;
    for (const auto& c : channels) n_max = std::max(n_max, c.n);
    const double r_max = 3.0 * n_max * n_max;
    for (const auto& c : channels) {
        b.channels_.push_back(c);
        b.radials_.push_back(std::make_shared<RadialFunction>(c, r_max, step));
    }
    return b;
}

} // namespace rydline
