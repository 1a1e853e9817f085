#pragma once

#include "rydline/basis.hpp"
#include "rydline/curve.hpp"

#include <Eigen/Dense>

#include <vector>

namespace rydline {

/// Soft-core electron-perturber polarization potential
///   V(xi) = -(alpha/2) (beta^4 + xi^4)^{-1},  xi = |r - R zhat|.

/// <a| V |b> over a Basis by 2D (r, 1-cos theta) product quadrature with the
/// azimuthal integral reduced analytically. Converged to 1e-8 absolute by
/// mesh doubling.
double softcore_matrix_element(const Basis& basis, std::size_t i, std::size_t j, double R,
                               double alpha, double beta);

/// Full interaction matrix (shared quadrature mesh for all elements).
Eigen::MatrixXd softcore_matrix(const Basis& basis, double R, double alpha, double beta,
                                int refine = 0);

/// Phase shift of the soft-core potential in Born approximation:
/// delta = -2k int j_L(kr)^2 V(r) r^2 dr.
double softcore_born_phase(double alpha, double beta, int L, double k);

/// Calibrate beta so the soft-core Born phase at k = 0.05 sits 1% below the
/// zero-range Born value pi abar_L k^2 (the two agree exactly only in the
/// beta -> 0 limit, so the matching tolerance defines beta).
double calibrate_beta(double alpha, int L = 2, double k_match = 0.05,
                      double mismatch = 0.01);

/// Degenerate-perturbation-theory curves: eigenvalues of the soft-core matrix
/// per R within a single degenerate manifold. Eigenvalues sorted ascending;
/// branch i is labeled with L = |M| + i (dominant partial wave by depth).
std::vector<PotentialCurve> softcore_curves(const Basis& basis,
                                            const std::vector<double>& R_grid, double alpha,
                                            double beta, int n_curves = 3);

} // namespace rydline
