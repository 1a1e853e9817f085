#pragma once

#include "rydline/curve.hpp"
#include "rydline/ionpair.hpp"

#include <functional>
#include <vector>

namespace rydline {

/// Vibrational level: node count v and energy (Hartree, relative to the
/// dissociation threshold of the truncated curve).
struct VibrationalLevel {
    int v = 0;
    double energy = 0.0;
};

struct VibrationalSpectrum {
    double m_AB = 0.0;
    int J = 0;
    double wall_R = 0.0;
    double box_R = 0.0;
    std::vector<VibrationalLevel> levels; // energy increasing with v
};

/// All negative-energy eigenvalues of the 1D nuclear problem on `potential`
/// (plus the centrifugal term) between a hard wall and an outer box.
/// Numerov shooting in the stretched coordinate x = sqrt(R) with node-count
/// bisection; `x_step` controls the uniform x grid.
VibrationalSpectrum bound_states(const std::function<double(double)>& potential, double m_AB,
                                 int J, double wall_R, double box_R, double x_step = 2e-3);

/// Convenience overload: monotone-cubic interpolation of a PotentialCurve,
/// zero beyond its last sample, optional -alpha/2R^4 polarization term.
VibrationalSpectrum bound_states(const PotentialCurve& curve, double m_AB, int J,
                                 double wall_R, double box_R, bool add_polarization = false,
                                 double alpha = 0.0, double x_step = 2e-3);

/// Nuclear wavefunction u(R) at a given energy (outward shot, unnormalized
/// sign convention: positive near the wall); used for node-count checks.
std::vector<double> nuclear_wavefunction(const std::function<double(double)>& potential,
                                         double m_AB, int J, double wall_R, double box_R,
                                         double energy, double x_step = 2e-3);

/// Effective nuclear quantum number per level:
/// V = sqrt(R' / (threshold - eps)).
std::vector<double> effective_quantum_numbers(const VibrationalSpectrum& spectrum,
                                              const SeriesConstants& constants);

/// Rescaled gap |2 (eps_v - eps_{v-1}) / R'|^{-1/3} per adjacent pair
/// (indexed by the upper level).
std::vector<double> scaled_gaps(const VibrationalSpectrum& spectrum, double rydberg_constant);

struct DefectFit {
    double eta = 0.0;        // v - V intercept under unit slope
    double slope = 0.0;      // free-slope fit
    double intercept = 0.0;  // free-slope fit
    double r_squared = 0.0;  // of the free-slope fit
    std::size_t n_points = 0;
};

/// Least squares of V against v over the top `window` fraction of the level
/// range; reports the free-slope fit and the unity-slope defect.
DefectFit fit_defect(const std::vector<int>& v, const std::vector<double>& V,
                     double window = 0.3);

} // namespace rydline
