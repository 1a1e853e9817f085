#include "rydline/vibronic.hpp"

#include "rydline/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rydline {

namespace {

// Numerov in the stretched coordinate x = sqrt(R), u = sqrt(x) w:
//   w''(x) = [8 m x^2 (V_eff(x^2) - E) + 3/(4 x^2)] w(x).
// The uniform x grid concentrates points at small R where the potential and
// the wavefunction vary fastest.
struct StretchedProblem {
    double x0 = 0.0, h = 0.0;
    std::vector<double> f_pot;  // 8 m x^2 V_eff + 3/(4x^2)
    std::vector<double> f_rate; // 8 m x^2

    StretchedProblem(const std::function<double(double)>& potential, double m_AB, int J,
                     double wall_R, double box_R, double x_step) {
        if (!(box_R > wall_R) || wall_R < 0.0)
            throw std::invalid_argument("bound_states: need 0 <= wall_R < box_R");
        x0 = std::sqrt(wall_R);
        h = x_step;
        const double x_end = std::sqrt(box_R);
        const auto npts = static_cast<std::size_t>(std::ceil((x_end - x0) / h)) + 1;
        if (npts < 32) throw std::invalid_argument("bound_states: box too small for the grid");
        f_pot.resize(npts);
        f_rate.resize(npts);
        const double cent = J * (J + 1.0) / (2.0 * m_AB);
        for (std::size_t i = 0; i < npts; ++i) {
            const double x = x0 + h * i;
            if (x <= 0.0) { // wall at the origin; w(0) = 0, row unused
                f_pot[i] = 0.0;
                f_rate[i] = 0.0;
                continue;
            }
            const double R = x * x;
            const double veff = potential(R) + cent / (R * R);
            f_rate[i] = 8.0 * m_AB * x * x;
            f_pot[i] = f_rate[i] * veff + 3.0 / (4.0 * x * x);
        }
    }

    // Outward Numerov shot; returns the node count, optionally the w samples.
    int shoot(double E, std::vector<double>* w_out = nullptr) const {
        const std::size_t n = f_pot.size();
        const double c = h * h / 12.0;
        auto f = [&](std::size_t i) { return f_pot[i] - E * f_rate[i]; };

        double w0, w1;
        if (x0 == 0.0) {
            w0 = std::pow(h, 1.5); // regular u ~ R gives w ~ x^{3/2}
            w1 = std::pow(2.0 * h, 1.5);
        } else {
            w0 = 0.0;
            w1 = 1e-12;
        }
        if (w_out) {
            w_out->assign(n, 0.0);
            (*w_out)[x0 == 0.0 ? 1 : 0] = w0;
            (*w_out)[x0 == 0.0 ? 2 : 1] = w1;
        }
        int nodes = 0;
        const std::size_t i_start = (x0 == 0.0) ? 2 : 1;
        double fm = f(i_start - 1), f0 = f(i_start);
        for (std::size_t i = i_start + 1; i < n; ++i) {
            const double fp = f(i);
            const double w2 =
                (2.0 * w1 * (1.0 + 5.0 * c * f0) - w0 * (1.0 - c * fm)) / (1.0 - c * fp);
            if (w2 * w1 < 0.0) ++nodes;
            w0 = w1;
            w1 = w2;
            fm = f0;
            f0 = fp;
            if (std::abs(w1) > 1e200) {
                w0 *= 1e-200;
                w1 *= 1e-200;
                if (w_out)
                    for (auto& v : *w_out) v *= 1e-200;
            }
            if (w_out) (*w_out)[i] = w1;
        }
        return nodes;
    }
};

} // namespace

VibrationalSpectrum bound_states(const std::function<double(double)>& potential, double m_AB,
                                 int J, double wall_R, double box_R, double x_step) {
    if (!(m_AB > 0.0)) throw std::invalid_argument("bound_states: m_AB must be positive");
    const StretchedProblem prob(potential, m_AB, J, wall_R, box_R, x_step);

    double v_min = 0.0;
    for (std::size_t i = (wall_R == 0.0) ? 1 : 0; i < prob.f_pot.size(); ++i)
        if (prob.f_rate[i] > 0.0) v_min = std::min(v_min, prob.f_pot[i] / prob.f_rate[i]);

    const double e_top = -1e-16;
    const int n_bound = prob.shoot(e_top);

    VibrationalSpectrum spec;
    spec.m_AB = m_AB;
    spec.J = J;
    spec.wall_R = wall_R;
    spec.box_R = box_R;
    spec.levels.reserve(n_bound);
    for (int v = 0; v < n_bound; ++v) {
        double lo = v_min, hi = e_top;
        // invariant: nodes(lo) <= v < nodes(hi)
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (prob.shoot(mid) <= v ? lo : hi) = mid;
            if (hi - lo < std::max(1e-16, 1e-13 * std::abs(hi))) break;
        }
        const double E = 0.5 * (lo + hi);
        if (!spec.levels.empty() && E <= spec.levels.back().energy)
            throw std::runtime_error("bound_states: level ordering broke (missed level?)");
        spec.levels.push_back({v, E});
    }
    return spec;
}

VibrationalSpectrum bound_states(const PotentialCurve& curve, double m_AB, int J,
                                 double wall_R, double box_R, bool add_polarization,
                                 double alpha, double x_step) {
    if (curve.R.size() < 2) throw std::invalid_argument("bound_states: curve too short");
    const MonotoneCubic interp(curve.R, curve.V);
    const auto potential = [interp, add_polarization, alpha](double R) {
        double v = 0.0;
        if (interp.contains(R))
            v = interp.value(R);
        else if (R < interp.x_min())
            v = interp.value(interp.x_min());
        // beyond the last sample the truncated curve is zero
        if (add_polarization) v += -alpha / (2.0 * R * R * R * R);
        return v;
    };
    return bound_states(potential, m_AB, J, wall_R, box_R, x_step);
}

std::vector<double> nuclear_wavefunction(const std::function<double(double)>& potential,
                                         double m_AB, int J, double wall_R, double box_R,
                                         double energy, double x_step) {
    const StretchedProblem prob(potential, m_AB, J, wall_R, box_R, x_step);
    std::vector<double> w;
    prob.shoot(energy, &w);
    // convert back to u(R) = sqrt(x) w(x) on the x grid
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] *= std::sqrt(prob.x0 + prob.h * i);
    return w;
}

std::vector<double> effective_quantum_numbers(const VibrationalSpectrum& spectrum,
                                              const SeriesConstants& constants) {
    std::vector<double> out;
    out.reserve(spectrum.levels.size());
    for (const auto& lvl : spectrum.levels) {
        const double denom = constants.threshold_shift - lvl.energy;
        if (!(denom > 0.0))
            throw std::domain_error(
                "effective_quantum_numbers: level above the series threshold");
        out.push_back(std::sqrt(constants.rydberg_constant / denom));
    }
    return out;
}

std::vector<double> scaled_gaps(const VibrationalSpectrum& spectrum, double rydberg_constant) {
    if (spectrum.levels.size() < 2)
        throw std::invalid_argument("scaled_gaps: need at least two levels");
    std::vector<double> out;
    out.reserve(spectrum.levels.size() - 1);
    for (std::size_t i = 1; i < spectrum.levels.size(); ++i) {
        const double gap = spectrum.levels[i].energy - spectrum.levels[i - 1].energy;
        if (gap == 0.0) throw std::domain_error("scaled_gaps: degenerate adjacent levels");
        out.push_back(std::pow(std::abs(2.0 * gap / rydberg_constant), -1.0 / 3.0));
    }
    return out;
}

DefectFit fit_defect(const std::vector<int>& v, const std::vector<double>& V, double window) {
    if (v.size() != V.size()) throw std::invalid_argument("fit_defect: size mismatch");
    if (v.empty()) throw std::invalid_argument("fit_defect: empty input");
    const auto [vmin_it, vmax_it] = std::minmax_element(v.begin(), v.end());
    const double cut = *vmax_it - window * (*vmax_it - *vmin_it);

    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] >= cut) {
            xs.push_back(v[i]);
            ys.push_back(V[i]);
        }
    if (xs.size() < 10)
        throw std::invalid_argument("fit_defect: fewer than 10 levels in the fit window");

    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    DefectFit fit;
    fit.n_points = xs.size();
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.eta = (sx - sy) / n; // unity-slope fit: V = v - eta

    double ss_res = 0.0, ss_tot = 0.0;
    const double ymean = sy / n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double pred = fit.slope * xs[i] + fit.intercept;
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - ymean) * (ys[i] - ymean);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

} // namespace rydline
