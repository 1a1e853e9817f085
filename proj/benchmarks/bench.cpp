#include "rydline/basis.hpp"
#include "rydline/pec.hpp"
#include "rydline/scattering.hpp"
#include "rydline/vibronic.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <vector>

using namespace rydline;

namespace {

std::map<int, PhaseShiftModel> dwave() {
    std::map<int, PhaseShiftModel> m;
    m.emplace(2, PhaseShiftModel::born(2, 319.2));
    return m;
}

void bm_radial_build(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        RadialFunction u({n, 2, 0, 0.0}, 3.0 * n * n, 0.01);
        benchmark::DoNotOptimize(u.value(n * n));
    }
}
BENCHMARK(bm_radial_build)->Arg(20)->Arg(30)->Arg(40);

void bm_basis_build(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const Basis b = Basis::single_manifold(n, 2);
        benchmark::DoNotOptimize(b.size());
    }
}
BENCHMARK(bm_basis_build)->Arg(20)->Arg(30);

void bm_assemble_diagonalize(benchmark::State& state) {
    const Basis b = Basis::single_manifold(static_cast<int>(state.range(0)), 2);
    const auto models = dwave();
    std::vector<double> grid;
    for (double R = 300.0; R <= 1500.0; R += 100.0) grid.push_back(R);
    for (auto _ : state) {
        const auto res = adiabatic_curves(b, grid, models);
        benchmark::DoNotOptimize(res.curves[0].V.back());
    }
}
BENCHMARK(bm_assemble_diagonalize)->Arg(30)->Arg(40);

void bm_vibrational_solve(benchmark::State& state) {
    for (auto _ : state) {
        const auto spec =
            bound_states([](double R) { return -1.0 / R; }, 100.0, 0, 0.0, 400.0);
        benchmark::DoNotOptimize(spec.levels.size());
    }
}
BENCHMARK(bm_vibrational_solve);

} // namespace

BENCHMARK_MAIN();
