#include "exbound/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

#include "exbound/error.hpp"
#include "exbound/kernels.hpp"

namespace exbound::mc {

namespace {

struct Prepared {
  std::vector<kernels::SamplingJob> jobs;
  // Noisy analytic distribution per setting, used on the analytic path.
  std::vector<std::vector<double>> noisy;
  std::vector<std::vector<double>> ideal;
};

std::vector<double> born_distribution(const scenario::MeasurementBasis& basis, const numerics::StateVector& state) {
  std::vector<double> out;
  for (const auto& b : basis.vectors) out.push_back(numerics::probability(state, b));
  // Renormalize away rounding so the sampler's sum check sees exactly ~1.
  const double total = std::accumulate(out.begin(), out.end(), 0.0);
  for (auto& p : out) p /= total;
  return out;
}

Prepared prepare(const std::vector<scenario::MeasurementBasis>& bases, const numerics::StateVector& state,
                 const NoiseModel& noise, std::uint64_t seed, std::int64_t shots, Domain domain) {
  Prepared out;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    if (bases[k].vectors.size() != noise.dim()) {
      throw Error(ErrorKind::DimensionMismatch,
                  fmt::format("noise model dim {} for a {}-outcome basis", noise.dim(), bases[k].vectors.size()));
    }
    auto ideal = born_distribution(bases[k], state);
    auto noisy = noise.apply(ideal);
    out.jobs.push_back({noisy, shots, {seed, domain, k}});
    out.noisy.push_back(std::move(noisy));
    out.ideal.push_back(std::move(ideal));
  }
  return out;
}

double binomial_std_error(double p_hat, std::int64_t shots) {
  if (shots == kAnalytic) return 0.0;
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(shots));
}

// Runs every setting and reads event e from outcome `outcome[e]` of setting `setting[e]`.
SimulatedRun simulate(const std::string& name, const scenario::Scenario& s,
                      const std::vector<scenario::MeasurementBasis>& bases, std::uint64_t seed, std::int64_t shots,
                      const NoiseModel& noise, Execution exec, Domain domain) {
  if (shots < 0) throw Error(ErrorKind::InvalidDistribution, "negative shot count");
  if (noise.dim() != s.dim) {
    throw Error(ErrorKind::DimensionMismatch, fmt::format("noise dim {} for a dim-{} scenario", noise.dim(), s.dim));
  }
  const auto prepared = prepare(bases, s.state, noise, seed, shots, domain);

  SimulatedRun run;
  run.experiment = name;
  run.seed = seed;
  run.shots = shots;
  run.visibility = noise.visibility();
  for (const auto& b : bases) run.setting_names.push_back(b.name);
  if (shots != kAnalytic) run.counts = kernels::sample_jobs(prepared.jobs, exec);

  double var = 0.0;
  for (std::size_t e = 0; e < s.events.size(); ++e) {
    const auto& basis = scenario::basis_containing(bases, e);
    const auto setting = static_cast<std::size_t>(&basis - bases.data());
    const auto outcome = *basis.outcome_of(e);
    const double noisy = prepared.noisy[setting][outcome];
    const double p_hat =
        shots == kAnalytic ? noisy
                           : static_cast<double>(run.counts[setting][outcome]) / static_cast<double>(shots);
    const double err = binomial_std_error(p_hat, shots);
    run.estimates.push_back({s.events[e].label, s.events[e].notation, p_hat, err,
                             prepared.ideal[setting][outcome], noisy});
    run.total.value += p_hat;
    var += err * err;
  }
  run.total.std_error = std::sqrt(var);
  return run;
}

}  // namespace

NoiseModel::NoiseModel(double visibility, std::size_t dim) : visibility_(visibility), dim_(dim) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    throw Error(ErrorKind::ProbabilityOutOfRange, fmt::format("visibility {}", visibility));
  }
  if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "noise model of dimension 0");
}

double NoiseModel::apply(double p_ideal) const noexcept {
  return visibility_ * p_ideal + (1.0 - visibility_) / static_cast<double>(dim_);
}

std::vector<double> NoiseModel::apply(std::span<const double> distribution) const {
  if (distribution.size() != dim_) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("{}-outcome distribution for noise dim {}", distribution.size(), dim_));
  }
  std::vector<double> out;
  for (double p : distribution) out.push_back(apply(p));
  return out;
}

Counts sample_setting(std::span<const double> probabilities, std::int64_t shots, std::mt19937_64& rng) {
  if (probabilities.empty()) throw Error(ErrorKind::InvalidDistribution, "empty distribution");
  if (shots < 1) throw Error(ErrorKind::InvalidDistribution, "shot count must be at least 1");
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw Error(ErrorKind::InvalidDistribution, fmt::format("p = {}", p));
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorKind::InvalidDistribution, fmt::format("probabilities sum to {}", total));
  }

  Counts counts(probabilities.size(), 0);
  std::int64_t remaining = shots;
  double mass_left = 1.0;
  for (std::size_t k = 0; k + 1 < probabilities.size() && remaining > 0; ++k) {
    const double q = mass_left > 0.0 ? std::clamp(probabilities[k] / mass_left, 0.0, 1.0) : 0.0;
    std::binomial_distribution<std::int64_t> draw(remaining, q);
    counts[k] = draw(rng);
    remaining -= counts[k];
    mass_left -= probabilities[k];
  }
  counts.back() += remaining;
  return counts;
}

bound::Probabilities SimulatedRun::p_hat() const {
  bound::Probabilities out{};
  for (std::size_t i = 0; i < out.size() && i < estimates.size(); ++i) out[i] = estimates[i].p_hat;
  return out;
}

bound::Probabilities SimulatedRun::std_errors() const {
  bound::Probabilities out{};
  for (std::size_t i = 0; i < out.size() && i < estimates.size(); ++i) out[i] = estimates[i].std_error;
  return out;
}

SimulatedRun run_chsh(std::uint64_t seed, std::int64_t shots, const NoiseModel& noise, Execution exec) {
  static const auto scenario = scenario::build_chsh_scenario();
  static const auto bases = scenario::chsh_setting_bases();
  return simulate("chsh", scenario, bases, seed, shots, noise, exec, Domain::ChshSetting);
}

SimulatedRun run_nc(std::uint64_t seed, std::int64_t shots, const NoiseModel& noise, Execution exec) {
  static const auto scenario = scenario::build_nc_scenario();
  static const auto bases = scenario::measurement_bases();
  return simulate("nc", scenario, bases, seed, shots, noise, exec, Domain::NcSetting);
}

std::vector<CheckCell> ExclusivityChecks::declared_rows(const graph::ExclusivityGraph& g) const {
  std::vector<CheckCell> rows;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    rows.push_back(cells[i][i]);
    for (auto j : g.neighbors(i)) rows.push_back(cells[j][i]);
  }
  return rows;
}

ExclusivityChecks run_exclusivity_checks(const scenario::Scenario& s, std::uint64_t seed, std::int64_t shots,
                                         const NoiseModel& noise, Execution exec) {
  if (shots < 0) throw Error(ErrorKind::InvalidDistribution, "negative shot count");
  const bool is_chsh = s.dim == 4;
  const auto bases = is_chsh ? scenario::chsh_setting_bases() : scenario::measurement_bases();
  const Domain domain = is_chsh ? Domain::ChshExclusivity : Domain::NcExclusivity;
  const std::size_t n = s.events.size();

  struct Slot {
    std::size_t outcome;
    double ideal;
    double noisy;
  };
  std::vector<kernels::SamplingJob> jobs;
  std::vector<Slot> slots;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& basis = scenario::basis_containing(bases, j);
    if (basis.vectors.size() != noise.dim()) {
      throw Error(ErrorKind::DimensionMismatch, "noise model dim does not match the measured basis");
    }
    const auto outcome = *basis.outcome_of(j);
    for (std::size_t i = 0; i < n; ++i) {
      auto ideal = born_distribution(basis, s.events[i].vec);
      auto noisy = noise.apply(ideal);
      const double overlap = numerics::fidelity(s.events[j].vec, s.events[i].vec);
      slots.push_back({outcome, overlap, noise.apply(overlap)});
      jobs.push_back({std::move(noisy), shots, {seed, domain, j * n + i}});
    }
  }
  std::vector<Counts> counts;
  if (shots != kAnalytic) counts = kernels::sample_jobs(jobs, exec);

  ExclusivityChecks out;
  out.experiment = s.name;
  out.cells.assign(n, std::vector<CheckCell>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = j * n + i;
      const double p_hat = shots == kAnalytic ? slots[k].noisy
                                              : static_cast<double>(counts[k][slots[k].outcome]) /
                                                    static_cast<double>(shots);
      out.cells[j][i] = {j, i, p_hat, binomial_std_error(p_hat, shots), slots[k].ideal};
    }
  }
  return out;
}

std::vector<bound::WReport> run_w_report(const SimulatedRun& chsh, const SimulatedRun& nc) {
  if (chsh.estimates.size() != 8 || nc.estimates.size() != 8) {
    throw Error(ErrorKind::DimensionMismatch, "W report needs eight estimates per run");
  }
  return bound::w_reports(chsh.p_hat(), chsh.std_errors(), nc.p_hat(), nc.std_errors());
}

}  // namespace exbound::mc
