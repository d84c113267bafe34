// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "exbound/eprinciple.hpp"
#include "exbound/kernels.hpp"
#include "exbound/scenario.hpp"

using namespace exbound;

namespace {

std::vector<kernels::SamplingJob> nc_jobs(std::int64_t shots) {
  const auto s = scenario::build_nc_scenario();
  std::vector<kernels::SamplingJob> jobs;
  std::uint64_t index = 0;
  for (const auto& basis : scenario::measurement_bases()) {
    std::vector<double> p;
    for (const auto& v : basis.vectors) p.push_back(numerics::probability(s.state, v));
    double total = 0.0;
    for (double x : p) total += x;
    for (double& x : p) x /= total;
    jobs.push_back({p, shots, {1, mc::Domain::NcSetting, index++}});
  }
  return jobs;
}

kernels::CliqueFamily product_family() {
  const auto chsh = scenario::build_chsh_scenario();
  const auto nc = scenario::build_nc_scenario();
  kernels::CliqueFamily f{20, {}, {}};
  for (const auto& u : chsh.events) {
    for (const auto& v : nc.events) f.events.push_back(numerics::tensor(u.vec, v.vec));
  }
  for (const auto& m : bound::all_merge_maps()) f.cliques.push_back(m.product_vertices());
  return f;
}

template <auto Kernel>
void BM_Sampling(benchmark::State& state) {
  const auto jobs = nc_jobs(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(jobs.size()) * state.range(0));
}

template <auto Kernel>
void BM_CliqueSweep(benchmark::State& state) {
  const auto family = product_family();
  const auto states = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(family, states, 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_Coverage(benchmark::State& state) {
  const kernels::CoverageConfig config{1, static_cast<std::size_t>(state.range(0)), 200000, 0.998, 0.995, 5.0};
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Sampling<kernels::sample_jobs_serial>)->Name("sampling/serial")->Arg(200000)->Arg(2000000);
BENCHMARK(BM_Sampling<kernels::sample_jobs_omp>)->Name("sampling/omp")->Arg(200000)->Arg(2000000);
BENCHMARK(BM_CliqueSweep<kernels::clique_sum_sweep_serial>)->Name("clique_sweep/serial")->Arg(1000)->Arg(10000);
BENCHMARK(BM_CliqueSweep<kernels::clique_sum_sweep_omp>)->Name("clique_sweep/omp")->Arg(1000)->Arg(10000);
BENCHMARK(BM_Coverage<kernels::coverage_sweep_serial>)->Name("coverage/serial")->Arg(50)->Arg(200);
BENCHMARK(BM_Coverage<kernels::coverage_sweep_omp>)->Name("coverage/omp")->Arg(50)->Arg(200);

BENCHMARK_MAIN();
