#pragma once

// Finite-statistics emulation of both experiments under isotropic white noise.
//
// Every local setting is sampled from its own RNG substream, derived from the
// master seed and the setting index, so results do not depend on the order in
// which settings are processed or on the thread count.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "exbound/eprinciple.hpp"
#include "exbound/rng.hpp"
#include "exbound/scenario.hpp"

namespace exbound::mc {

inline constexpr std::int64_t kDefaultShots = 200000;
// shots == 0 selects the infinite-statistics (analytic) path.
inline constexpr std::int64_t kAnalytic = 0;

enum class Execution { Serial, Parallel };

class NoiseModel {
 public:
  NoiseModel(double visibility, std::size_t dim);

  double visibility() const noexcept { return visibility_; }
  std::size_t dim() const noexcept { return dim_; }

  // V p + (1 - V) / dim
  double apply(double p_ideal) const noexcept;
  std::vector<double> apply(std::span<const double> distribution) const;

 private:
  double visibility_;
  std::size_t dim_;
};

using Counts = std::vector<std::int64_t>;

// Multinomial draw of `shots` outcomes by sequential conditional binomials.
Counts sample_setting(std::span<const double> probabilities, std::int64_t shots, std::mt19937_64& rng);

struct Estimate {
  std::string label;
  std::string notation;
  double p_hat;
  double std_error;       // sqrt(p_hat (1 - p_hat) / N); 0 on the analytic path
  double ideal;           // noise-free value
  double noisy_expected;  // V * ideal + (1 - V) / dim
};

struct Total {
  double value;
  double std_error;  // root-sum-square of the per-event errors
};

struct SimulatedRun {
  std::string experiment;  // "chsh" | "nc"
  std::uint64_t seed = 0;
  std::int64_t shots = 0;
  double visibility = 1.0;
  std::vector<std::string> setting_names;
  std::vector<Counts> counts;  // per setting; empty on the analytic path
  std::vector<Estimate> estimates;
  Total total{0.0, 0.0};

  bound::Probabilities p_hat() const;
  bound::Probabilities std_errors() const;
};

// Four settings (i, j), four outcomes each; estimates in u0..u7 order.
SimulatedRun run_chsh(std::uint64_t seed, std::int64_t shots, const NoiseModel& noise,
                      Execution exec = Execution::Parallel);

// Eight triangle bases, five outcomes each; p(v_i) is read off the basis
// ending at i.
SimulatedRun run_nc(std::uint64_t seed, std::int64_t shots, const NoiseModel& noise,
                    Execution exec = Execution::Parallel);

struct CheckCell {
  std::size_t measured;  // j: the observable |e_j><e_j|
  std::size_t prepared;  // i: the prepared state e_i
  double p_hat;
  double std_error;
  double ideal;
};

// cells[j][i] estimates p(1 | mu_j ; e_i): e_i is prepared and the basis that
// contains e_j is measured.
struct ExclusivityChecks {
  std::string experiment;
  std::vector<std::vector<CheckCell>> cells;

  // Rows the published check tables list: for each prepared event, the
  // diagonal followed by every declared-exclusive partner.
  std::vector<CheckCell> declared_rows(const graph::ExclusivityGraph& g) const;
};

ExclusivityChecks run_exclusivity_checks(const scenario::Scenario& s, std::uint64_t seed, std::int64_t shots,
                                         const NoiseModel& noise, Execution exec = Execution::Parallel);

// Sixteen W values with propagated uncertainties from two runs.
std::vector<bound::WReport> run_w_report(const SimulatedRun& chsh, const SimulatedRun& nc);

}  // namespace exbound::mc
