#pragma once

#include "rydline/curve.hpp"
#include "rydline/scattering.hpp"

namespace rydline {

/// Effective fractional charge dressing the perturber,
///   Q = -(dnu/dE)^{-1} / (pi k) * ddelta/dk  at k = k_n(R),
/// evaluated with nu = n of the reference manifold. Negative for a positive
/// time delay (electron lingers near the perturber). At R = R_c the Born
/// form has the finite limit -2 abar_L / n^3; other models throw there.
double effective_charge(const PhaseShiftModel& model, int n, double R);
double effective_charge_magnitude(const PhaseShiftModel& model, int n, double R);

/// Dressed ion-pair PEC: V = 1/(2n^2) - 1/(2 (n - delta/pi)^2) for R <= R_c,
/// zero beyond the classical radius.
double model_value(const PhaseShiftModel& model, int n, double R);
PotentialCurve model_curve(const PhaseShiftModel& model, int n,
                           const std::vector<double>& R_grid);

/// Term toggles for the large-n expansion of the model curve.
struct ExpansionTerms {
    bool polarization = true; // -alpha / 2R^4
    bool constant = true;     // +abar_L / n^5
    bool coulomb = true;      // -2 abar_L / (n^3 R)
    bool quadratic = true;    // -6 abar_L^2 / (n^4 R^2)
};

double expansion_value(double alpha, int L, int n, double R, ExpansionTerms terms = {});
PotentialCurve expansion_curve(double alpha, int L, int n, const std::vector<double>& R_grid,
                               ExpansionTerms terms = {});

/// Trimmed-heavy-Rydberg-series constants for manifold n and partial wave L.
struct SeriesConstants {
    int n_ref = 0;
    int L = 0;
    double abar = 0.0;            // a0^3, Born coefficient or table-calibrated
    double m_AB = 0.0;            // electron masses
    double rydberg_constant = 0.0; // R' = 2 m_AB abar^2 / n^6, Hartree
    double threshold_shift = 0.0;  // abar / n^5, Hartree
    int v_max = 0;                 // floor(sqrt(2 abar m_AB / n))

    /// Series predictor E_v = threshold_shift - R' / (v - eta)^2.
    double energy(double v, double eta = 0.0) const;
};

SeriesConstants series_constants(double abar, int L, int n, double m_AB);

/// Windowed charge: probability excess inside a sphere of radius xi0 around
/// the perturber, evaluated from the closed-form surface expression. Its
/// average over one period pi/k in xi0 reproduces effective_charge.
double windowed_charge(const PhaseShiftModel& model, int n, double R, double xi0);
double windowed_charge_cycle_average(const PhaseShiftModel& model, int n, double R, double xi0);

} // namespace rydline
