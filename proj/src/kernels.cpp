#include "exbound/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace exbound::kernels {

namespace {

mc::Counts run_job(const SamplingJob& job) {
  auto rng = mc::make_stream(job.key);
  return mc::sample_setting(job.distribution, job.shots, rng);
}

double max_clique_sum_for_state(const CliqueFamily& family, std::size_t k, std::uint64_t seed) {
  auto rng = mc::make_stream({seed, mc::Domain::RandomStates, k});
  const auto state = mc::random_state(family.dim, rng);
  std::vector<double> probs;
  probs.reserve(family.events.size());
  for (const auto& e : family.events) probs.push_back(numerics::fidelity(e, state));
  double best = 0.0;
  for (const auto& clique : family.cliques) {
    double sum = 0.0;
    for (auto idx : clique) sum += probs[idx];
    best = std::max(best, sum);
  }
  return best;
}

// Per-trial outcome of the coverage sweep.
struct TrialResult {
  std::vector<bool> hit;
  std::vector<double> abs_error;
};

TrialResult run_trial(const CoverageConfig& config, std::size_t t) {
  const std::uint64_t seed = config.first_seed + t;
  const auto chsh = mc::run_chsh(seed, config.shots, mc::NoiseModel(config.chsh_visibility, 4), mc::Execution::Serial);
  const auto nc = mc::run_nc(seed, config.shots, mc::NoiseModel(config.nc_visibility, 5), mc::Execution::Serial);
  TrialResult out;
  for (const auto* run : {&chsh, &nc}) {
    for (const auto& e : run->estimates) {
      const double err = std::abs(e.p_hat - e.noisy_expected);
      out.hit.push_back(err <= config.z * e.std_error);
      out.abs_error.push_back(err);
    }
  }
  return out;
}

Coverage reduce(const std::vector<TrialResult>& trials) {
  Coverage out{trials.size(), {}, {}};
  if (trials.empty()) return out;
  const std::size_t events = trials.front().hit.size();
  out.hits.assign(events, 0);
  out.mean_abs_error.assign(events, 0.0);
  for (const auto& t : trials) {
    for (std::size_t e = 0; e < events; ++e) {
      out.hits[e] += t.hit[e] ? 1 : 0;
      out.mean_abs_error[e] += t.abs_error[e];
    }
  }
  for (auto& m : out.mean_abs_error) m /= static_cast<double>(trials.size());
  return out;
}

}  // namespace

std::vector<mc::Counts> sample_jobs_serial(std::span<const SamplingJob> jobs) {
  std::vector<mc::Counts> out(jobs.size());
  for (std::size_t k = 0; k < jobs.size(); ++k) out[k] = run_job(jobs[k]);
  return out;
}

std::vector<mc::Counts> sample_jobs_omp(std::span<const SamplingJob> jobs) {
  std::vector<mc::Counts> out(jobs.size());
  const auto n = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) out[k] = run_job(jobs[k]);
  return out;
}

CliqueSweep clique_sum_sweep_serial(const CliqueFamily& family, std::size_t states, std::uint64_t seed) {
  double best = 0.0;
  for (std::size_t k = 0; k < states; ++k) best = std::max(best, max_clique_sum_for_state(family, k, seed));
  return {best, states, states * family.cliques.size()};
}

CliqueSweep clique_sum_sweep_omp(const CliqueFamily& family, std::size_t states, std::uint64_t seed) {
  double best = 0.0;
  const auto n = static_cast<std::int64_t>(states);
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::int64_t k = 0; k < n; ++k) {
    best = std::max(best, max_clique_sum_for_state(family, static_cast<std::size_t>(k), seed));
  }
  return {best, states, states * family.cliques.size()};
}

Coverage coverage_sweep_serial(const CoverageConfig& config) {
  std::vector<TrialResult> trials(config.trials);
  for (std::size_t t = 0; t < config.trials; ++t) trials[t] = run_trial(config, t);
  return reduce(trials);
}

Coverage coverage_sweep_omp(const CoverageConfig& config) {
  std::vector<TrialResult> trials(config.trials);
  const auto n = static_cast<std::int64_t>(config.trials);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < n; ++t) trials[t] = run_trial(config, static_cast<std::size_t>(t));
  return reduce(trials);
}

}  // namespace exbound::kernels
