#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rydline/ionpair.hpp"
#include "rydline/vibronic.hpp"

#include <cmath>
#include <vector>

using namespace rydline;

TEST_CASE("hydrogenic oracle for the nuclear integrator") {
    const auto spec =
        bound_states([](double R) { return -1.0 / R; }, 1.0, 0, 0.0, 200.0, 1e-3);
    REQUIRE(spec.levels.size() >= 4);
    for (int v = 0; v < 4; ++v) {
        const double exact = -0.5 / ((v + 1.0) * (v + 1.0));
        CHECK(spec.levels[v].v == v);
        CHECK(std::abs(spec.levels[v].energy - exact) < 1e-8);
    }
}

TEST_CASE("zero potential supports no bound states") {
    const auto spec = bound_states([](double) { return 0.0; }, 100.0, 0, 10.0, 500.0);
    CHECK(spec.levels.empty());
}

TEST_CASE("centrifugal term raises the levels") {
    const auto j0 = bound_states([](double R) { return -1.0 / R; }, 1.0, 0, 0.0, 80.0);
    const auto j1 = bound_states([](double R) { return -1.0 / R; }, 1.0, 1, 0.0, 80.0);
    REQUIRE_FALSE(j0.levels.empty());
    REQUIRE_FALSE(j1.levels.empty());
    CHECK(j1.levels[0].energy > j0.levels[0].energy);
    CHECK(j1.levels[0].energy == doctest::Approx(-0.125).epsilon(1e-6));
}

TEST_CASE("hard wall pushes levels up") {
    const auto loose = bound_states([](double R) { return -1.0 / R; }, 1.0, 0, 0.0, 60.0);
    const auto tight = bound_states([](double R) { return -1.0 / R; }, 1.0, 0, 1.0, 60.0);
    REQUIRE_FALSE(tight.levels.empty());
    CHECK(tight.levels[0].energy > loose.levels[0].energy);
}

TEST_CASE("curve overload matches the functional form") {
    PotentialCurve c;
    c.n_ref = 1;
    for (double R = 0.5; R <= 120.0; R += 0.05) {
        c.R.push_back(R);
        c.V.push_back(-1.0 / R + 1.0 / 120.0);
    }
    const auto direct = bound_states(
        [](double R) { return R < 120.0 ? -1.0 / R + 1.0 / 120.0 : 0.0; }, 1.0, 0, 1.0,
        200.0);
    const auto interp = bound_states(c, 1.0, 0, 1.0, 200.0);
    REQUIRE(direct.levels.size() == interp.levels.size());
    for (std::size_t i = 0; i < direct.levels.size(); ++i)
        CHECK(interp.levels[i].energy ==
              doctest::Approx(direct.levels[i].energy).epsilon(1e-6));
}

TEST_CASE("effective quantum numbers invert the series definition") {
    SeriesConstants sc = series_constants(3.04, 2, 30, 79212.7);
    VibrationalSpectrum spec;
    spec.m_AB = 79212.7;
    for (int v = 5; v <= 40; ++v)
        spec.levels.push_back({v, sc.energy(static_cast<double>(v))});
    const auto V = effective_quantum_numbers(spec, sc);
    for (std::size_t i = 0; i < V.size(); ++i)
        CHECK(V[i] == doctest::Approx(spec.levels[i].v).epsilon(1e-12));

    VibrationalSpectrum one;
    one.levels.push_back({0, sc.threshold_shift - sc.rydberg_constant});
    CHECK(effective_quantum_numbers(one, sc)[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("effective quantum numbers with a synthetic defect") {
    SeriesConstants sc = series_constants(3.04, 2, 30, 79212.7);
    VibrationalSpectrum spec;
    for (int v = 10; v <= 60; ++v)
        spec.levels.push_back({v, sc.energy(static_cast<double>(v), 2.5)});
    const auto V = effective_quantum_numbers(spec, sc);
    for (std::size_t i = 0; i < V.size(); ++i)
        CHECK(V[i] == doctest::Approx(spec.levels[i].v - 2.5).epsilon(1e-12));
}

TEST_CASE("scaled gaps against a hand evaluation") {
    const double Rp = 1.0;
    VibrationalSpectrum spec;
    spec.levels.push_back({99, -Rp / (99.0 * 99.0)});
    spec.levels.push_back({100, -Rp / (100.0 * 100.0)});
    const auto gaps = scaled_gaps(spec, Rp);
    REQUIRE(gaps.size() == 1);
    CHECK(gaps[0] == doctest::Approx(62.68).epsilon(1e-3));
    CHECK(gaps[0] ==
          doctest::Approx(std::pow(4.061e-6, -1.0 / 3.0)).epsilon(1e-3));
}

TEST_CASE("scaled gaps of an exact series grow linearly with slope 4^{-1/3}") {
    const double Rp = 1.0;
    VibrationalSpectrum spec;
    for (int v = 80; v <= 120; ++v) spec.levels.push_back({v, -Rp / (double(v) * v)});
    const auto gaps = scaled_gaps(spec, Rp);
    const double slope =
        (gaps.back() - gaps.front()) / static_cast<double>(gaps.size() - 1);
    CHECK(slope == doctest::Approx(std::pow(4.0, -1.0 / 3.0)).epsilon(1e-3));
}

TEST_CASE("degenerate adjacent levels are rejected") {
    VibrationalSpectrum spec;
    spec.levels.push_back({0, -1.0});
    spec.levels.push_back({1, -1.0});
    CHECK_THROWS(scaled_gaps(spec, 1.0));
}

TEST_CASE("defect fit recovers a synthetic eta") {
    std::vector<int> v;
    std::vector<double> V;
    for (int i = 0; i <= 60; ++i) {
        v.push_back(i);
        V.push_back(i - 0.37);
    }
    const DefectFit fit = fit_defect(v, V, 0.3);
    CHECK(fit.eta == doctest::Approx(0.37).epsilon(1e-10));
    CHECK(fit.slope == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.n_points >= 10);
}

TEST_CASE("harmonic ladder is rejected by the linearity measure") {
    SeriesConstants sc = series_constants(3.04, 2, 30, 79212.7);
    std::vector<int> v;
    std::vector<double> V;
    VibrationalSpectrum spec;
    for (int i = 0; i <= 60; ++i)
        spec.levels.push_back({i, sc.threshold_shift - 1e-4 + 1.5e-6 * i});
    const auto Veff = effective_quantum_numbers(spec, sc);
    for (int i = 0; i <= 60; ++i) v.push_back(i);
    const DefectFit fit = fit_defect(v, Veff, 0.3);
    CHECK(fit.r_squared < 0.999);
}

TEST_CASE("insufficient fit windows throw") {
    std::vector<int> v{0, 1, 2, 3, 4};
    std::vector<double> V{0.0, 1.0, 2.0, 3.0, 4.0};
    CHECK_THROWS(fit_defect(v, V, 0.3));
}

TEST_CASE("nuclear wavefunction node count matches the level index") {
    const auto spec = bound_states([](double R) { return -1.0 / R; }, 1.0, 0, 0.0, 60.0);
    REQUIRE(spec.levels.size() >= 3);
    for (int v = 0; v < 3; ++v) {
        const auto u = nuclear_wavefunction([](double R) { return -1.0 / R; }, 1.0, 0, 0.0,
                                            60.0, spec.levels[v].energy);
        int nodes = 0;
        // skip the tail where the outward solution diverges
        const std::size_t cut = u.size() / 2;
        for (std::size_t i = 1; i < cut; ++i)
            if (u[i - 1] != 0.0 && u[i] * u[i - 1] < 0.0) ++nodes;
        CHECK(nodes == v);
    }
}
