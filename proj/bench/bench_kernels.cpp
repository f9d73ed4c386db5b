// Serial reference vs OpenMP grid kernels.  The serial implementations are
// the ones the tests compare against bit for bit; this target measures what
// the parallel versions buy on larger grids.

#include <benchmark/benchmark.h>

#include <cmath>

#include "virateich/coframe.hpp"
#include "virateich/grid2d.hpp"
#include "virateich/periodic_fn.hpp"

using namespace virateich;

namespace {

Grid2D sample_grid(int nx, int ny) {
    const std::vector<double> y = geometric_heights(0.01, 1.02, ny);
    Grid2D g(nx, y);
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < nx; ++i)
            g.at(j, i) = std::sin(kTwoPi * (5.0 * i) / nx + y[static_cast<std::size_t>(j)]) /
                         y[static_cast<std::size_t>(j)];
    return g;
}

void bm_dx_serial(benchmark::State& state) {
    const Grid2D g = sample_grid(512, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exterior::serial::d_x(g));
}

void bm_dx_parallel(benchmark::State& state) {
    const Grid2D g = sample_grid(512, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exterior::d_x(g));
}

void bm_dy_serial(benchmark::State& state) {
    const Grid2D g = sample_grid(512, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exterior::serial::d_y(g));
}

void bm_dy_parallel(benchmark::State& state) {
    const Grid2D g = sample_grid(512, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exterior::d_y(g));
}

void bm_structure_residuals(benchmark::State& state) {
    const CoframeGrid C = make_example_coframe(
        ExampleCoframe::half_plane, 512, geometric_heights(0.01, 1.02, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(structure_residuals(C));
}

} // namespace

BENCHMARK(bm_dx_serial)->Arg(64)->Arg(256);
BENCHMARK(bm_dx_parallel)->Arg(64)->Arg(256);
BENCHMARK(bm_dy_serial)->Arg(64)->Arg(256);
BENCHMARK(bm_dy_parallel)->Arg(64)->Arg(256);
BENCHMARK(bm_structure_residuals)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
