#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exbound/exgraph.hpp"
#include "exbound/numerics.hpp"

namespace exbound::scenario {

using numerics::StateVector;

struct Event {
  std::string label;     // "u0", "v3", ...
  std::string notation;  // outcome|settings, e.g. "1,-1|1,1" or "0,0,1|1,2,3"
  StateVector vec;

  friend bool operator==(const Event&, const Event&) = default;
};

struct Scenario {
  std::string name;
  std::size_t dim = 0;
  StateVector state;
  std::vector<Event> events;
  graph::ExclusivityGraph graph;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Declared edges must be orthogonal to this, non-edges must overlap by more
// than kNonEdgeOverlap.
inline constexpr double kEdgeOverlapTolerance = 1e-9;
inline constexpr double kNonEdgeOverlap = 1e-6;

struct Violation {
  std::string check;  // "event count", "state norm", "event norm", "edge orthogonality", "non-edge overlap", ...
  std::string detail;
};

std::vector<Violation> validate(const Scenario& s);
// Throws InvariantViolation naming the first failed check.
void require_valid(const Scenario& s);

StateVector chsh_state();
StateVector nc_state();

// Two qubits, sigma_z / sigma_x on each side, events u0..u7, graph C8(3,4).
Scenario build_chsh_scenario();
// Five-level system, events v0..v7, graph C8(1,2).
Scenario build_nc_scenario();

double sum_value(const Scenario& s);

// Largest eigenpair of sum_i |e_i><e_i|: the quantum maximum of the sum and a
// state attaining it.
numerics::Eigenpair quantum_max(const Scenario& s);

struct ChshIdentity {
  double s_events;     // sum of the eight event probabilities
  double correlator;   // <A0B0> + <A1B0> - <A1B1> + <A0B1>
  double s_from_correlator;  // 2 + correlator / 2
};

ChshIdentity chsh_identity_check(const StateVector& state);

// entry[j][i] = |<e_j|e_i>|^2, the noise-free p(1 | mu_j ; e_i).
std::vector<std::vector<double>> exclusivity_table(const Scenario& s);

// A complete projective measurement. member[k] names the scenario event that
// outcome k realizes, if any.
struct MeasurementBasis {
  std::string name;
  std::vector<StateVector> vectors;
  std::vector<std::optional<std::size_t>> member;

  std::optional<std::size_t> outcome_of(std::size_t event) const;
};

// Four local settings (i, j) in order (0,0), (0,1), (1,0), (1,1); outcomes
// ordered (+,+), (+,-), (-,+), (-,-).
std::vector<MeasurementBasis> chsh_setting_bases();

// One basis per triangle {v_{i-2}, v_{i-1}, v_i}, ordered by i. Each holds the
// triple followed by its two completion vectors; the name is the roman
// numeral the published basis table uses for that triangle.
std::vector<MeasurementBasis> measurement_bases();

// Basis used to test event j: the CHSH setting containing u_j, or the NC
// triangle ending at v_j.
const MeasurementBasis& basis_containing(const std::vector<MeasurementBasis>& bases, std::size_t event);

std::string to_json(const Scenario& s);
// Re-validates; ParseError for malformed input, InvariantViolation otherwise.
Scenario from_json(const std::string& text);

namespace detail {
// NC scenario with v3 nudged along |1> by `offset` (renormalized) and no
// validation. Fault-injection hook for the verify report.
Scenario nc_scenario_with_v3_offset(double offset);
}  // namespace detail

}  // namespace exbound::scenario
