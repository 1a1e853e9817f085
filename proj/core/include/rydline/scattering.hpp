#pragma once

#include "rydline/interpolation.hpp"
#include "rydline/species.hpp"

#include <cmath>
#include <functional>

namespace rydline {

/// Born-approximation coefficient: abar_L = alpha / ((4L^2-1)(2L+3)).
/// Only claimed universal for L >= 2; smaller L throws.
double born_coefficient(int L, double alpha);

/// Evaluable phase shift delta_L(k) with an analytic or interpolated
/// derivative. Immutable after construction; evaluation is pure.
class PhaseShiftModel {
public:
    enum class Kind { Born, Table, Custom };

    static PhaseShiftModel born(int L, double alpha);
    static PhaseShiftModel from_table(const PhaseShiftTable& table);
    /// Arbitrary delta(k) with its analytic derivative; used for synthetic
    /// power-law shifts in tests and for zeroed channels.
    static PhaseShiftModel custom(int L, std::function<double(double)> delta,
                                  std::function<double(double)> slope);
    static PhaseShiftModel zero(int L);

    int L() const { return L_; }
    Kind kind() const { return kind_; }
    /// Born coefficient backing a Born-kind model.
    double born_abar() const;

    double phase_shift(double k) const;
    double phase_shift_slope(double k) const;
    /// Generalized scattering volume -tan(delta_L)/k^(2L+1); k > 0 required.
    double scattering_volume(double k) const;
    /// Resonance flag used when tables cross delta = pi/2.
    bool resonant(double k) const { return std::abs(std::tan(phase_shift(k))) > 1e6; }

private:
    PhaseShiftModel() = default;

    int L_ = 0;
    Kind kind_ = Kind::Born;
    double abar_ = 0.0;
    MonotoneCubic table_;
    std::function<double(double)> delta_fn_, slope_fn_;
};

/// Build the model prescribed by a species config for partial wave L:
/// Born from the polarizability, or the referenced table.
PhaseShiftModel make_phase_model(const SpeciesData& species, int L);

} // namespace rydline
