// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include <numbers>

#include <benchmark/benchmark.h>

#include "zenohol/application.hpp"
#include "zenohol/dynamics.hpp"
#include "zenohol/gates.hpp"

namespace {

using namespace zenohol;

void BM_EnumerateBasis(benchmark::State& state) {
  const SectorConfig cfg{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_basis(cfg));
}
BENCHMARK(BM_EnumerateBasis)->Args({4, 2})->Args({6, 3})->Args({10, 5});

void BM_DarkSolve(benchmark::State& state) {
  const DarkSolver solver(ModelConfig{});
  const ControlParams p{1.0, 0.669, 1.0, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(solver.dark_coords(p));
}
BENCHMARK(BM_DarkSolve);

// A loose tolerance stops after one refinement: N, 2N and 4N samples.
void BM_TransportLoop(benchmark::State& state) {
  const DarkSolver solver(ModelConfig{});
  TransportOptions opt;
  opt.initial_steps = static_cast<int>(state.range(0));
  opt.max_steps = 4 * opt.initial_steps;
  opt.tolerance = 1.0;
  const PathProgram path = phi_path(1, 0, std::numbers::pi / 6);
  for (auto _ : state) benchmark::DoNotOptimize(transport(path, solver, opt));
  state.SetItemsProcessed(state.iterations() * 7 * state.range(0));
}
BENCHMARK(BM_TransportLoop)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_DickeTransport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prepare_dicke_holonomic());
}
BENCHMARK(BM_DickeTransport)->Unit(benchmark::kMillisecond);

void BM_EvolveFull(benchmark::State& state) {
  const StateVector psi0 = StateVector::basis_state(enumerate_basis({4, 2}), {2, 0, 0, 0, 0});
  const Schedule schedule{theta_path(0, std::numbers::pi / 4), 20.0};
  EvolveOptions opt;
  opt.steps_per_time = 500;
  for (auto _ : state) benchmark::DoNotOptimize(evolve(ModelConfig{}, schedule, psi0, opt));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_EvolveFull)->Unit(benchmark::kMillisecond);

void BM_ClosedFormSearch(benchmark::State& state) {
  DickeSearchGrid grid;
  for (int i = 0; i < 59; ++i) grid.thetas.push_back(0.05 + 0.025 * i);
  for (auto _ : state) benchmark::DoNotOptimize(search_dicke_path(grid));
}
BENCHMARK(BM_ClosedFormSearch)->Unit(benchmark::kMillisecond);

void BM_Universality(benchmark::State& state) {
  const double theta = std::numbers::pi / 6;
  const auto u1 = closed_form_phi(1, 0, theta);
  const auto u2 = closed_form_phi(0, -1, theta);
  for (auto _ : state) benchmark::DoNotOptimize(universality_sample(u1, u2, 30, 10000, 7));
}
BENCHMARK(BM_Universality)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
