#include <benchmark/benchmark.h>

#include <complex>

#include "fracdyn/frac_evolution.hpp"
#include "fracdyn/models.hpp"
#include "fracdyn/trajectory.hpp"

using namespace fracdyn;

namespace {

void BM_MittagLeffler(benchmark::State& state) {
    const double alpha = static_cast<double>(state.range(0)) / 100.0;
    const std::complex<double> u = i_pow_minus_alpha(alpha);
    // anti-Stokes argument at the scale the trajectories use
    const std::complex<double> z = u * std::pow(15.0, alpha);
    for (auto _ : state) {
        auto r = ml(FractionalOrder{alpha}, z, 1e-12);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_MittagLeffler)->Arg(25)->Arg(50)->Arg(75)->Arg(100);

void BM_PropagatorCoeffs(benchmark::State& state) {
    const OmegaVector w = pt_waveguide(1.0, 0.5);
    double t = 0.0;
    for (auto _ : state) {
        t = t < 20.0 ? t + 1e-3 : 1e-3;  // vary t so nothing is trivially cached
        auto c = propagator_coeffs(FractionalOrder{0.5}, w, t, 1e-12);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_PropagatorCoeffs);

void BM_TrajectoryPoint(benchmark::State& state) {
    // full pipeline cost per grid point, amortized over a 512-point run
    const auto preset = make_preset(PresetName::zeeman);
    const auto grid = uniform_grid(20.0, 512);
    for (auto _ : state) {
        auto traj = compute_trajectory(FractionalOrder{0.5}, preset.omega(),
                                       preset.dyson_init, grid, 1e-12);
        benchmark::DoNotOptimize(traj);
    }
    state.SetItemsProcessed(state.iterations() * 512);
}
BENCHMARK(BM_TrajectoryPoint);

} // namespace

BENCHMARK_MAIN();
