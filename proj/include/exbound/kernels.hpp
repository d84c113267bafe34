#pragma once

// Data-parallel kernels. Each `_omp` kernel has a `_serial` twin with the same
// contract; the twins are kept as the reference implementation and must agree
// bit for bit, since every work item draws from its own RNG substream and the
// reductions are order-independent or performed in index order.

#include <cstdint>
#include <span>
#include <vector>

#include "exbound/montecarlo.hpp"
#include "exbound/numerics.hpp"
#include "exbound/rng.hpp"

namespace exbound::kernels {

struct SamplingJob {
  std::vector<double> distribution;
  std::int64_t shots;
  mc::StreamKey key;
};

std::vector<mc::Counts> sample_jobs_serial(std::span<const SamplingJob> jobs);
std::vector<mc::Counts> sample_jobs_omp(std::span<const SamplingJob> jobs);

inline std::vector<mc::Counts> sample_jobs(std::span<const SamplingJob> jobs, mc::Execution exec) {
  return exec == mc::Execution::Serial ? sample_jobs_serial(jobs) : sample_jobs_omp(jobs);
}

// Events plus sets of pairwise-orthogonal events among them.
struct CliqueFamily {
  std::size_t dim;
  std::vector<numerics::StateVector> events;
  std::vector<std::vector<std::size_t>> cliques;
};

struct CliqueSweep {
  double max_sum;          // largest clique probability sum seen
  std::size_t states;      // random states tried
  std::size_t evaluations; // clique sums evaluated
};

// Random state k comes from StreamKey{seed, RandomStates, k}.
CliqueSweep clique_sum_sweep_serial(const CliqueFamily& family, std::size_t states, std::uint64_t seed);
CliqueSweep clique_sum_sweep_omp(const CliqueFamily& family, std::size_t states, std::uint64_t seed);

struct CoverageConfig {
  std::uint64_t first_seed;
  std::size_t trials;
  std::int64_t shots;
  double chsh_visibility;
  double nc_visibility;
  double z;  // half-width in standard errors
};

// hits[e] counts the trials whose estimate of event e (u0..u7 then v0..v7)
// lies within z standard errors of its noisy analytic value.
struct Coverage {
  std::size_t trials;
  std::vector<std::size_t> hits;
  std::vector<double> mean_abs_error;
};

Coverage coverage_sweep_serial(const CoverageConfig& config);
Coverage coverage_sweep_omp(const CoverageConfig& config);

}  // namespace exbound::kernels
