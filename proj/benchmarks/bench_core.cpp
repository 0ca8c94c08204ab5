// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths of the solver loop.

#include <benchmark/benchmark.h>

#include <random>

#include "curlcurl/nehari.hpp"
#include "curlcurl/random_fields.hpp"
#include "curlcurl/reconstruct3d.hpp"
#include "curlcurl/symmetry.hpp"

using namespace curlcurl;

namespace {

CylField bench_field(int n) {
    auto g = make_grid(10.0, 10.0, n, n);
    std::mt19937_64 rng(42);
    return random_bump_field(g, rng, {.nonnegative = true});
}

void BM_integrate_r3(benchmark::State& state) {
    CylField u = bench_field(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(integrate_r3(u));
}
BENCHMARK(BM_integrate_r3)->Arg(129)->Arg(257);

void BM_dirichlet_energy(benchmark::State& state) {
    CylField u = bench_field(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dirichlet_energy(u));
}
BENCHMARK(BM_dirichlet_energy)->Arg(129)->Arg(257);

void BM_nonlinear_pairing(benchmark::State& state) {
    CylField u = bench_field(static_cast<int>(state.range(0)));
    const Nonlinearity f = Nonlinearity::power(3.0);
    for (auto _ : state) benchmark::DoNotOptimize(nonlinear_pairing(u, f));
}
BENCHMARK(BM_nonlinear_pairing)->Arg(129)->Arg(257);

void BM_pde_residual(benchmark::State& state) {
    CylField u = bench_field(static_cast<int>(state.range(0)));
    const Potential V = Potential::constant(1.0);
    const Nonlinearity f = Nonlinearity::power(3.0);
    for (auto _ : state) benchmark::DoNotOptimize(pde_residual(u, V, f));
}
BENCHMARK(BM_pde_residual)->Arg(129)->Arg(257);

void BM_steiner_symmetrize(benchmark::State& state) {
    CylField u = bench_field(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(steiner_symmetrize(u));
}
BENCHMARK(BM_steiner_symmetrize)->Arg(129)->Arg(257);

void BM_nehari_scale(benchmark::State& state) {
    CylField u = bench_field(static_cast<int>(state.range(0)));
    const Potential V = Potential::constant(1.0);
    const Nonlinearity f = Nonlinearity::power(3.0);
    for (auto _ : state) benchmark::DoNotOptimize(nehari_scale(u, V, f));
}
BENCHMARK(BM_nehari_scale)->Arg(129);

void BM_reconstruct(benchmark::State& state) {
    CylField u = bench_field(129);
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct(u, 5.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_reconstruct)->Arg(65);

}  // namespace

BENCHMARK_MAIN();
