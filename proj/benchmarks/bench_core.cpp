#include <benchmark/benchmark.h>

#include <widthlab/brendle.hpp>
#include <widthlab/comparison.hpp>
#include <widthlab/mesh.hpp>
#include <widthlab/spaceform.hpp>
#include <widthlab/stability.hpp>
#include <widthlab/varifold.hpp>

namespace {

void BM_sn(benchmark::State& state) {
    double r = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(widthlab::sn({1.0}, r));
        r += 1e-9;
    }
}
BENCHMARK(BM_sn);

void BM_ball_area(benchmark::State& state) {
    auto profile = widthlab::WarpedProfile::space_form({-1.0}, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(widthlab::ball_area(int(state.range(0)), profile));
    }
}
BENCHMARK(BM_ball_area)->Arg(2)->Arg(3);

void BM_solve_f(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(widthlab::solve_f(2, {0.0}, {1.0}, 1.0));
    }
}
BENCHMARK(BM_solve_f);

void BM_field_jacobian(benchmark::State& state) {
    widthlab::VecN y(3), x(3);
    y << 1.0, 0.0, 0.0;
    x << 0.3, 0.2, 0.1;
    const int k = int(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(widthlab::brendle_DY(y, k, x));
    }
}
BENCHMARK(BM_field_jacobian)->Arg(2)->Arg(3);

void BM_first_variation(benchmark::State& state) {
    const auto V = widthlab::equatorial_disk_fixture(int(state.range(0)));
    const auto basis = widthlab::tangent_test_basis();
    for (auto _ : state) {
        benchmark::DoNotOptimize(widthlab::first_variation(V, basis.front()));
    }
}
BENCHMARK(BM_first_variation)->Arg(50)->Arg(200);

void BM_assemble_fem(benchmark::State& state) {
    const auto mesh = widthlab::geodesic_disk_mesh({-1.0}, 1.0, int(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(widthlab::assemble_operators(mesh, false));
    }
}
BENCHMARK(BM_assemble_fem)->Arg(10)->Arg(20);

} // namespace

BENCHMARK_MAIN();
