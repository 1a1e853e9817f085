#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rydline/scattering.hpp"
#include "rydline/species.hpp"

#include <cmath>
#include <numbers>

using namespace rydline;

TEST_CASE("Born coefficient closed form") {
    CHECK(born_coefficient(2, 319.2) == doctest::Approx(319.2 / 105.0).epsilon(1e-14));
    CHECK(born_coefficient(3, 319.2) == doctest::Approx(319.2 / 315.0).epsilon(1e-14));
    CHECK(born_coefficient(4, 319.2) == doctest::Approx(319.2 / 693.0).epsilon(1e-14));
    CHECK_THROWS(born_coefficient(1, 319.2));
    CHECK_THROWS(born_coefficient(0, 319.2));
}

TEST_CASE("Born model phase shift and slope") {
    const auto m = PhaseShiftModel::born(2, 319.2);
    const double abar = 319.2 / 105.0;
    const double k = 0.03;
    CHECK(m.phase_shift(k) ==
          doctest::Approx(std::numbers::pi * abar * k * k).epsilon(1e-14));
    CHECK(m.phase_shift_slope(k) ==
          doctest::Approx(2.0 * std::numbers::pi * abar * k).epsilon(1e-14));
    CHECK(m.born_abar() == doctest::Approx(abar).epsilon(1e-14));
    CHECK(m.kind() == PhaseShiftModel::Kind::Born);
}

TEST_CASE("scattering volume sign and threshold behavior") {
    const auto m = PhaseShiftModel::born(2, 319.2);
    const double k = 0.02;
    CHECK(m.scattering_volume(k) ==
          doctest::Approx(-std::tan(m.phase_shift(k)) / std::pow(k, 5)).epsilon(1e-13));
    CHECK(m.scattering_volume(k) < 0.0);
    CHECK_THROWS(m.scattering_volume(0.0));
    CHECK_THROWS(m.scattering_volume(-0.1));
}

TEST_CASE("table model interpolates and refuses extrapolation") {
    PhaseShiftTable t;
    t.L = 2;
    for (int i = 1; i <= 20; ++i) {
        const double k = 0.01 * i;
        t.k.push_back(k);
        t.delta.push_back(0.1 * k * k);
    }
    const auto m = PhaseShiftModel::from_table(t);
    CHECK(m.kind() == PhaseShiftModel::Kind::Table);
    CHECK(m.phase_shift(0.055) == doctest::Approx(0.1 * 0.055 * 0.055).epsilon(1e-4));
    CHECK(m.phase_shift_slope(0.1) == doctest::Approx(0.02).epsilon(1e-3));
    CHECK_THROWS_AS((void)m.phase_shift(0.5), std::out_of_range);
    CHECK_THROWS_AS((void)m.phase_shift(0.001), std::out_of_range);
    CHECK_THROWS(m.born_abar());
}

TEST_CASE("custom model and resonance flag") {
    const auto m = PhaseShiftModel::custom(
        0, [](double k) { return std::atan(2.0 * k); },
        [](double k) { return 2.0 / (1.0 + 4.0 * k * k); });
    CHECK(m.scattering_volume(0.3) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK_FALSE(m.resonant(0.3));

    const auto res = PhaseShiftModel::custom(
        0, [](double) { return std::numbers::pi / 2.0; }, [](double) { return 0.0; });
    CHECK(res.resonant(0.1));

    const auto z = PhaseShiftModel::zero(1);
    CHECK(z.phase_shift(0.2) == 0.0);
    CHECK(z.scattering_volume(0.2) == 0.0);
}

TEST_CASE("make_phase_model follows the species prescription") {
    SpeciesData s;
    s.name = "X";
    s.polarizability = 210.0;
    s.mass_amu = 10.0;
    const auto born = make_phase_model(s, 2);
    CHECK(born.kind() == PhaseShiftModel::Kind::Born);
    CHECK(born.born_abar() == doctest::Approx(2.0).epsilon(1e-14));
}
