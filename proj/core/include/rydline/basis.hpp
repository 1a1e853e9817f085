#pragma once

#include "rydline/species.hpp"

#include <cmath>
#include <cstddef>
#include <memory>
#include <vector>

namespace rydline {

/// One Rydberg-electron channel |n l m> with quantum defect mu_l.
struct RydbergChannel {
    int n = 0;
    int l = 0;
    int m = 0;
    double mu = 0.0;

    double nu() const { return n - mu; }
    bool valid() const { return l >= 0 && l < n && std::abs(m) <= l && nu() > 0.0; }
};

/// Channel energy E = -1/(2 nu^2).
double channel_energy(const RydbergChannel& c);

/// Density of states dnu/dE = nu^3.
double density_of_states(double nu);

struct LocalMomentum {
    double k;   // sqrt(2/R - 1/n^2)
    double R_c; // classical radius 2 n^2
};

/// Electron momentum at the perturber, relative to the n hydrogenic manifold.
/// Throws for R beyond the classical turning point R_c = 2n^2.
LocalMomentum local_momentum(int n, double R);

/// Normalized radial function u_nl(r) and derivative on a uniform grid.
/// Built by inward Numerov integration; values outside the stored range
/// (beyond r_max, or inside the truncated inner forbidden region) are 0.
class RadialFunction {
public:
    RadialFunction(RydbergChannel channel, double r_max, double step);

    const RydbergChannel& channel() const { return channel_; }
    double value(double r) const;
    double derivative(double r) const;
    int node_count() const { return nodes_; }
    double r_inner() const { return r0_; }
    double r_outer() const { return r0_ + h_ * (u_.size() - 1); }
    double grid_step() const { return h_; }
    const std::vector<double>& values() const { return u_; }
    const std::vector<double>& derivatives() const { return up_; }

    /// <u|other> by Simpson on the common grid (functions must share step).
    double overlap(const RadialFunction& other) const;
    /// <u| r |other>, radial part of dipole integrals.
    double radial_dipole(const RadialFunction& other) const;

private:
    RydbergChannel channel_;
    double r0_ = 0.0; // first stored radius
    double h_ = 0.0;  // stored step
    std::vector<double> u_, up_;
    int nodes_ = 0;
};

/// Cached set of channels sharing a projection M: the degenerate n manifold
/// plus optional quantum-defect-split channels from nearby manifolds.
class Basis {
public:
    /// Single hydrogenic manifold (mu_l = 0), channels l = |M| .. n-1.
    static Basis single_manifold(int n, int m, double r_max_factor = 3.0, double step = 0.01);
    /// Manifold n with defects applied, plus defect-split channels whose
    /// energies fall within +-1 manifold spacing; defects from `species`.
    static Basis with_defects(const SpeciesData& species, int n, int m, double step = 0.01);

    int n_ref() const { return n_ref_; }
    int m() const { return m_; }
    std::size_t size() const { return channels_.size(); }
    const RydbergChannel& channel(std::size_t i) const { return channels_[i]; }
    const RadialFunction& radial(std::size_t i) const { return *radials_[i]; }

private:
    int n_ref_ = 0;
    int m_ = 0;
    std::vector<RydbergChannel> channels_;
    std::vector<std::shared_ptr<const RadialFunction>> radials_;
};

} // namespace rydline
