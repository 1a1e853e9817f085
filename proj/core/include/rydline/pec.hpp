#pragma once

#include "rydline/basis.hpp"
#include "rydline/curve.hpp"
#include "rydline/scattering.hpp"

#include <Eigen/Dense>

#include <map>
#include <vector>

namespace rydline {

/// Adiabatic electronic eigenstate at fixed R over a Basis.
struct ElectronicState {
    double R = 0.0;
    double eigenvalue = 0.0; // Hartree, relative to the reference manifold
    std::vector<double> coefficients;
};

/// f_nl(R) entering the M = 0 D-wave contact element.
double dwave_fnl(int l, double R, double nu);
/// g_l entering the M = 2 D-wave contact element.
double dwave_gl(int l);

/// Channel weight vector w for partial wave (L, M = basis projection):
/// the contact interaction is the rank-1 form  S_L(k) * w w^T  with
/// S_L = -tan(delta_L)/k^(2L+1). Channels with |m| > L get weight 0.
std::vector<double> contact_weights(const Basis& basis, int L, double R);

/// Single contact matrix element between basis channels i and j.
double contact_matrix_element(const Basis& basis, std::size_t i, std::size_t j, int L,
                              double R, const PhaseShiftModel& model);

/// Sum of rank-1 contact terms over included partial waves, plus channel
/// detunings E_a - E(n_ref) on the diagonal. Exactly symmetric.
Eigen::MatrixXd assemble_interaction(const Basis& basis, double R,
                                     const std::map<int, PhaseShiftModel>& models);

/// Curve name conventions: L = 0 trilobite, 1 butterfly, 2 dragonfly,
/// 3 firefly, 4 gadfly.
std::string curve_label(int L);

struct AdiabaticResult {
    std::vector<PotentialCurve> curves;               // one per included L
    std::vector<std::vector<ElectronicState>> states; // parallel to curves
};

/// Diagonalize per R; the branch for each included L is selected by the
/// projection of eigenvectors onto the single-L model vector w. Optionally
/// adds the ion-atom polarization term -alpha/2R^4 to the output curves.
AdiabaticResult adiabatic_curves(const Basis& basis, const std::vector<double>& R_grid,
                                 const std::map<int, PhaseShiftModel>& models,
                                 bool include_polarization = false, double alpha = 0.0);

/// Psi_M(z, rho) on the phi = 0 half plane (rho >= 0).
double wavefunction_value(const Basis& basis, const ElectronicState& state, double z,
                          double rho);

enum class WavefunctionTransform { Raw, SqrtAbs, RhoSqrtAbs };

double wavefunction_display(const Basis& basis, const ElectronicState& state, double z,
                            double rho, WavefunctionTransform transform);

/// Nodal count of Psi along the closed half-ring of given radius centered on
/// the perturber at (z = R, rho = 0): interior sign changes plus one for the
/// nodal line on the internuclear axis when Psi vanishes at the ring ends
/// (always the case for M > 0).
int half_ring_nodes(const Basis& basis, const ElectronicState& state, double radius,
                    int samples = 3000);

/// <Psi| z |Psi> in atomic units (origin at the Rydberg core).
double dipole_moment(const Basis& basis, const ElectronicState& state);

} // namespace rydline
