#include "rydline/ionpair.hpp"

#include "rydline/basis.hpp"
#include "rydline/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydline {

double effective_charge(const PhaseShiftModel& model, int n, double R) {
    const LocalMomentum lm = local_momentum(n, R);
    const double inv_dos = 1.0 / density_of_states(static_cast<double>(n));
    if (lm.k <= 0.0) {
        if (model.kind() == PhaseShiftModel::Kind::Born)
            return -2.0 * model.born_abar() * inv_dos; // limit of 2 pi abar k / (pi k)
        throw std::domain_error("effective_charge: k = 0 limit undefined for this model");
    }
    return -inv_dos / (std::numbers::pi * lm.k) * model.phase_shift_slope(lm.k);
}

double effective_charge_magnitude(const PhaseShiftModel& model, int n, double R) {
    return std::abs(effective_charge(model, n, R));
}

double model_value(const PhaseShiftModel& model, int n, double R) {
    if (!(R > 0.0)) throw std::domain_error("model_value: R must be positive");
    const double R_c = 2.0 * static_cast<double>(n) * n;
    if (R > R_c) return 0.0;
    const double k = local_momentum(n, R).k;
    const double dpi = model.phase_shift(k) / std::numbers::pi;
    if (dpi >= n) throw std::domain_error("model_value: delta/pi >= n is nonphysical");
    const double nd = n - dpi;
    return 1.0 / (2.0 * static_cast<double>(n) * n) - 1.0 / (2.0 * nd * nd);
}

PotentialCurve model_curve(const PhaseShiftModel& model, int n,
                           const std::vector<double>& R_grid) {
    PotentialCurve c;
    c.symmetry_m = -1; // model is symmetry-blind; callers may relabel
    c.label = "ion-pair L=" + std::to_string(model.L());
    c.n_ref = n;
    c.provenance = CurveProvenance::IonPair;
    c.R = R_grid;
    c.V.reserve(R_grid.size());
    for (double R : R_grid) c.V.push_back(model_value(model, n, R));
    return c;
}

double expansion_value(double alpha, int L, int n, double R, ExpansionTerms terms) {
    const double abar = born_coefficient(L, alpha);
    const double n3 = static_cast<double>(n) * n * n;
    double v = 0.0;
    if (terms.polarization) v += -alpha / (2.0 * R * R * R * R);
    if (terms.constant) v += abar / (n3 * n * n);
    if (terms.coulomb) v += -2.0 * abar / (n3 * R);
    if (terms.quadratic) v += -6.0 * abar * abar / (n3 * n * R * R);
    return v;
}

PotentialCurve expansion_curve(double alpha, int L, int n, const std::vector<double>& R_grid,
                               ExpansionTerms terms) {
    PotentialCurve c;
    c.symmetry_m = -1;
    c.label = "expansion L=" + std::to_string(L);
    c.n_ref = n;
    c.provenance = CurveProvenance::Expansion;
    c.includes_polarization = terms.polarization;
    c.R = R_grid;
    c.V.reserve(R_grid.size());
    for (double R : R_grid) c.V.push_back(expansion_value(alpha, L, n, R, terms));
    return c;
}

double SeriesConstants::energy(double v, double eta) const {
    if (v <= eta) throw std::domain_error("SeriesConstants::energy: need v > eta");
    const double d = v - eta;
    return threshold_shift - rydberg_constant / (d * d);
}

SeriesConstants series_constants(double abar, int L, int n, double m_AB) {
    if (!(abar > 0.0) || !(m_AB > 0.0) || n < 1)
        throw std::invalid_argument("series_constants: inputs must be positive");
    SeriesConstants sc;
    sc.n_ref = n;
    sc.L = L;
    sc.abar = abar;
    sc.m_AB = m_AB;
    const double n3 = static_cast<double>(n) * n * n;
    sc.rydberg_constant = 2.0 * m_AB * abar * abar / (n3 * n3);
    sc.threshold_shift = abar / (n3 * n * n);
    sc.v_max = static_cast<int>(std::floor(std::sqrt(2.0 * abar * m_AB / n)));
    return sc;
}

double windowed_charge(const PhaseShiftModel& model, int n, double R, double xi0) {
    const double k = local_momentum(n, R).k;
    if (!(k > 0.0)) throw std::domain_error("windowed_charge: k = 0");
    const double inv_dos = 1.0 / density_of_states(static_cast<double>(n));
    const double d = model.phase_shift(k);
    const double dp = model.phase_shift_slope(k);
    const double osc =
        std::cos(2.0 * k * xi0 - model.L() * std::numbers::pi - d) * std::sin(d) /
        (std::numbers::pi * k * k);
    return -inv_dos * (dp / (std::numbers::pi * k) - osc);
}

double windowed_charge_cycle_average(const PhaseShiftModel& model, int n, double R,
                                     double xi0) {
    const double k = local_momentum(n, R).k;
    if (!(k > 0.0)) throw std::domain_error("windowed_charge_cycle_average: k = 0");
    const double period = std::numbers::pi / k;
    const double integral = simpson(
        [&](double x) { return windowed_charge(model, n, R, x); }, xi0, xi0 + period, 4096);
    return integral / period;
}

} // namespace rydline
