#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rydline/ionpair.hpp"
#include "rydline/scattering.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace rydline;

namespace {
const double abar_rb = 319.2 / 105.0; // 3.04
}

TEST_CASE("effective charge is R-independent in Born approximation") {
    const auto m = PhaseShiftModel::born(2, 319.2);
    const double expected = -2.0 * abar_rb / 27000.0;
    for (double R : {50.0, 300.0, 900.0, 1500.0, 1710.0, 1800.0}) {
        CHECK(effective_charge(m, 30, R) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(effective_charge_magnitude(m, 30, 900.0) ==
          doctest::Approx(2.0 * abar_rb / 27000.0).epsilon(1e-12));
}

TEST_CASE("effective charge for a non-Born model varies with R") {
    const auto m = PhaseShiftModel::custom(
        2, [](double k) { return 0.1 * k * k * k; },
        [](double k) { return 0.3 * k * k; });
    const double q1 = effective_charge(m, 30, 300.0);
    const double q2 = effective_charge(m, 30, 1200.0);
    CHECK(std::abs(q1 / q2 - 1.0) > 0.1);
    CHECK_THROWS(effective_charge(m, 30, 1800.0));
}

TEST_CASE("ion-pair curve vanishes at and beyond the classical radius") {
    const auto m = PhaseShiftModel::born(2, 319.2);
    CHECK(model_value(m, 30, 1800.0) == 0.0);
    CHECK(model_value(m, 30, 2500.0) == 0.0);
    CHECK(model_value(m, 30, 900.0) < 0.0);
}

TEST_CASE("ion-pair curve against a hand evaluation") {
    const auto m = PhaseShiftModel::born(2, 319.2);
    const double dpi = abar_rb / 900.0; // delta/pi at R = n^2
    const double nu = 30.0 - dpi;
    const double expected = 1.0 / 1800.0 - 0.5 / (nu * nu);
    CHECK(model_value(m, 30, 900.0) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("expansion term toggles") {
    const double R = 600.0;
    const int n = 30;
    ExpansionTerms only_coulomb;
    only_coulomb.polarization = false;
    only_coulomb.constant = false;
    only_coulomb.quadratic = false;
    CHECK(expansion_value(319.2, 2, n, R, only_coulomb) ==
          doctest::Approx(-2.0 * abar_rb / (27000.0 * R)).epsilon(1e-13));

    ExpansionTerms all;
    all.polarization = true;
    const double expected = -319.2 / (2.0 * R * R * R * R) +
                            abar_rb / std::pow(30.0, 5) -
                            2.0 * abar_rb / (27000.0 * R) -
                            6.0 * abar_rb * abar_rb / (810000.0 * R * R);
    CHECK(expansion_value(319.2, 2, n, R, all) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("series constants for Rb n = 30") {
    const SeriesConstants sc = series_constants(abar_rb, 2, 30, 79212.7);
    CHECK(sc.rydberg_constant ==
          doctest::Approx(2.0 * 79212.7 * abar_rb * abar_rb / std::pow(30.0, 6))
              .epsilon(1e-12));
    CHECK(sc.rydberg_constant == doctest::Approx(2.0085e-3).epsilon(1e-3));
    CHECK(sc.threshold_shift == doctest::Approx(abar_rb / std::pow(30.0, 5)).epsilon(1e-12));
    CHECK(sc.v_max == 126);
    CHECK(sc.energy(10.0) ==
          doctest::Approx(sc.threshold_shift - sc.rydberg_constant / 100.0).epsilon(1e-12));
    CHECK(sc.energy(10.0, 0.5) ==
          doctest::Approx(sc.threshold_shift - sc.rydberg_constant / (9.5 * 9.5))
              .epsilon(1e-12));
}

TEST_CASE("windowed charge cycle average reproduces the effective charge") {
    const auto m = PhaseShiftModel::born(2, 319.2);
    for (double R : {600.0, 900.0, 1400.0}) {
        const double q = effective_charge(m, 30, R);
        const double avg = windowed_charge_cycle_average(m, 30, R, 200.0);
        CHECK(avg == doctest::Approx(q).epsilon(1e-10));
    }
}

TEST_CASE("windowed charge oscillates around the cycle mean") {
    const auto m = PhaseShiftModel::born(2, 319.2);
    const double R = 900.0;
    const double k = std::sqrt(2.0 / R - 1.0 / 900.0);
    const double q = effective_charge(m, 30, R);
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double xi0 = 150.0 + (std::numbers::pi / k) * i / 64.0;
        const double w = windowed_charge(m, 30, R, xi0);
        lo = std::min(lo, w - q);
        hi = std::max(hi, w - q);
    }
    CHECK(lo < 0.0);
    CHECK(hi > 0.0);
}

TEST_CASE("model curve provenance and grid") {
    const auto m = PhaseShiftModel::born(2, 319.2);
    std::vector<double> grid{200.0, 900.0, 1800.0};
    const PotentialCurve c = model_curve(m, 30, grid);
    CHECK(c.provenance == CurveProvenance::IonPair);
    CHECK(c.n_ref == 30);
    CHECK(c.R == grid);
    CHECK(c.V.back() == 0.0);
}
