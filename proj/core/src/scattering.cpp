#include "rydline/scattering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydline {

double born_coefficient(int L, double alpha) {
    if (L < 2)
        throw std::invalid_argument(
            "born_coefficient: the Born form is only universal for L >= 2");
    if (!(alpha > 0.0)) throw std::invalid_argument("born_coefficient: alpha must be positive");
    return alpha / ((4.0 * L * L - 1.0) * (2.0 * L + 3.0));
}

PhaseShiftModel PhaseShiftModel::born(int L, double alpha) {
    PhaseShiftModel m;
    m.L_ = L;
    m.kind_ = Kind::Born;
    m.abar_ = born_coefficient(L, alpha);
    return m;
}

PhaseShiftModel PhaseShiftModel::from_table(const PhaseShiftTable& table) {
    PhaseShiftModel m;
    m.L_ = table.L;
    m.kind_ = Kind::Table;
    m.table_ = MonotoneCubic(table.k, table.delta);
    return m;
}

PhaseShiftModel PhaseShiftModel::custom(int L, std::function<double(double)> delta,
                                        std::function<double(double)> slope) {
    PhaseShiftModel m;
    m.L_ = L;
    m.kind_ = Kind::Custom;
    m.delta_fn_ = std::move(delta);
    m.slope_fn_ = std::move(slope);
    return m;
}

PhaseShiftModel PhaseShiftModel::zero(int L) {
    return custom(
        L, [](double) { return 0.0; }, [](double) { return 0.0; });
}

double PhaseShiftModel::born_abar() const {
    if (kind_ != Kind::Born)
        throw std::logic_error("born_abar: model is not Born-form");
    return abar_;
}

double PhaseShiftModel::phase_shift(double k) const {
    if (k < 0.0) throw std::domain_error("phase_shift: k must be non-negative");
    switch (kind_) {
    case Kind::Born:
        return std::numbers::pi * abar_ * k * k;
    case Kind::Table:
        if (!table_.contains(k))
            throw std::out_of_range("phase_shift: k outside table range (no extrapolation)");
        return table_.value(k);
    case Kind::Custom:
        return delta_fn_(k);
    }
    return 0.0;
}

double PhaseShiftModel::phase_shift_slope(double k) const {
    if (k < 0.0) throw std::domain_error("phase_shift_slope: k must be non-negative");
    switch (kind_) {
    case Kind::Born:
        return 2.0 * std::numbers::pi * abar_ * k;
    case Kind::Table:
        if (!table_.contains(k))
            throw std::out_of_range("phase_shift_slope: k outside table range");
        return table_.derivative(k);
    case Kind::Custom:
        return slope_fn_(k);
    }
    return 0.0;
}

double PhaseShiftModel::scattering_volume(double k) const {
    if (!(k > 0.0))
        throw std::domain_error("scattering_volume: threshold divergence at k = 0");
    return -std::tan(phase_shift(k)) / std::pow(k, 2 * L_ + 1);
}

PhaseShiftModel make_phase_model(const SpeciesData& species, int L) {
    const auto it = species.phase_shift_sources.find(L);
    if (it == species.phase_shift_sources.end() ||
        it->second.kind == PhaseShiftSource::Kind::Born)
        return PhaseShiftModel::born(L, species.polarizability);
    return PhaseShiftModel::from_table(load_phase_table(it->second.table_path, L));
}

} // namespace rydline
