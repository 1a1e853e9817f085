#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rydline/basis.hpp"
#include "rydline/pec.hpp"
#include "rydline/scattering.hpp"
#include "rydline/softcore.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <numbers>

using namespace rydline;

TEST_CASE("Born phase of the soft-core potential approaches the zero-range law") {
    const double alpha = 319.2;
    const double abar = born_coefficient(2, alpha);
    const double beta = 5.0;
    const double k = 0.02;
    const double delta = softcore_born_phase(alpha, beta, 2, k);
    const double zero_range = std::numbers::pi * abar * k * k;
    CHECK(delta > 0.0);
    CHECK(delta < zero_range);
    CHECK(delta == doctest::Approx(zero_range).epsilon(0.05));
}

TEST_CASE("Born phase grows with k^2 at low energy") {
    const double d1 = softcore_born_phase(319.2, 8.0, 2, 0.01);
    const double d2 = softcore_born_phase(319.2, 8.0, 2, 0.02);
    CHECK(d2 / d1 == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("beta calibration lands near 8.7 for rubidium") {
    const double beta = calibrate_beta(319.2, 2);
    CHECK(beta == doctest::Approx(8.7).epsilon(0.05));
    const double phase = softcore_born_phase(319.2, beta, 2, 0.05);
    const double target = std::numbers::pi * born_coefficient(2, 319.2) * 0.05 * 0.05;
    CHECK(phase / target == doctest::Approx(0.99).epsilon(1e-4));
}

TEST_CASE("soft-core matrix is symmetric with negative diagonal") {
    const Basis b = Basis::single_manifold(12, 2);
    const Eigen::MatrixXd V = softcore_matrix(b, 150.0, 319.2, 8.7);
    CHECK((V - V.transpose()).norm() < 1e-14 * V.norm());
    for (int i = 0; i < V.rows(); ++i) CHECK(V(i, i) < 0.0);
}

TEST_CASE("matrix element convergence helper agrees with the shared-mesh matrix") {
    const Basis b = Basis::single_manifold(12, 2);
    const double e = softcore_matrix_element(b, 0, 1, 150.0, 319.2, 8.7);
    const Eigen::MatrixXd V = softcore_matrix(b, 150.0, 319.2, 8.7, 1);
    CHECK(e == doctest::Approx(V(0, 1)).epsilon(1e-5));
}

TEST_CASE("soft-core dragonfly eigenvalue is near the contact one") {
    const Basis b = Basis::single_manifold(12, 2);
    const double R = 180.0;
    const auto curves = softcore_curves(b, {R}, 319.2, 8.7, 1);
    REQUIRE(curves.size() == 1);
    CHECK(curves[0].label == "dragonfly");
    std::map<int, PhaseShiftModel> m;
    m.emplace(2, PhaseShiftModel::born(2, 319.2));
    const auto contact = adiabatic_curves(b, {R - 5.0, R}, m);
    CHECK(curves[0].V[0] / contact.curves[0].V[1] == doctest::Approx(1.0).epsilon(0.15));
}
