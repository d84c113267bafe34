#include "exbound/scenario.hpp"

#include <array>
#include <cmath>
#include <fmt/format.h>
#include <json.hpp>

#include "exbound/error.hpp"

namespace exbound::scenario {

using numerics::Complex;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Eigenvector of the local observable `setting` (0 = sigma_z, 1 = sigma_x)
// for eigenvalue `outcome` (+1 / -1).
StateVector local_eigenvector(int setting, int outcome) {
  const double h = 1.0 / kSqrt2;
  if (setting == 0) return outcome == 1 ? StateVector{1.0, 0.0} : StateVector{0.0, 1.0};
  return outcome == 1 ? StateVector{h, h} : StateVector{h, -h};
}

struct ChshEventSpec {
  int a, b;  // outcomes on the first / second qubit
  int i, j;  // settings on the first / second qubit
};

// Order and outcome assignment of u0..u7.
constexpr std::array<ChshEventSpec, 8> kChshEvents{{
    {1, 1, 0, 0},
    {1, 1, 1, 0},
    {1, -1, 1, 1},
    {-1, -1, 0, 1},
    {-1, -1, 0, 0},
    {-1, -1, 1, 0},
    {-1, 1, 1, 1},
    {1, 1, 0, 1},
}};

StateVector chsh_event_vector(const ChshEventSpec& e) {
  return numerics::tensor(local_eigenvector(e.i, e.a), local_eigenvector(e.j, e.b));
}

std::vector<StateVector> nc_vectors() {
  const double r2 = kSqrt2;
  const double a = 2.0 - r2;           // 2 - sqrt2
  const double b = 3.0 - 2.0 * r2;     // 3 - 2 sqrt2
  const double c = std::sqrt(r2 - 1.0);
  const double d = std::sqrt(3.0 * r2 - 4.0);
  const double e = std::sqrt(2.0 * (5.0 * r2 - 7.0));
  const double f = std::sqrt(6.0 * r2 - 8.0);
  const double g = 2.0 * std::sqrt(5.0 * r2 - 7.0);
  return {
      StateVector::basis(5, 0),
      StateVector::basis(5, 1),
      StateVector::basis(5, 2),
      StateVector{a, 0.0, 0.0, c, -d},
      StateVector{b, a, 0.0, e, f},
      StateVector{a, b, a, -g, 0.0},
      StateVector{0.0, -a, -b, -e, f},
      StateVector{0.0, 0.0, -a, -c, -d},
  };
}

std::string nc_notation(std::size_t i) {
  return fmt::format("0,0,1|{},{},{}", (i + 6) % 8, (i + 7) % 8, i);
}

Scenario make_nc(std::vector<StateVector> vecs) {
  Scenario s;
  s.name = "nc";
  s.dim = 5;
  s.state = nc_state();
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    s.events.push_back({"v" + std::to_string(i), nc_notation(i), std::move(vecs[i])});
  }
  s.graph = graph::circulant({8, {1, 2}});
  return s;
}

nlohmann::ordered_json amps_to_json(const StateVector& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& z : v.amplitudes()) out.push_back({z.real(), z.imag()});
  return out;
}

StateVector amps_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "field '" + field + "' must be an array");
  std::vector<Complex> amps;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& z = j[k];
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      throw Error(ErrorKind::ParseError, fmt::format("field '{}[{}]' must be [re, im]", field, k));
    }
    amps.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return StateVector(std::move(amps));
}

const nlohmann::json& field(const nlohmann::json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorKind::ParseError, fmt::format("missing field '{}' in {}", name, where));
  }
  return j.at(name);
}

std::size_t line_of_offset(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
    if (text[k] == '\n') ++line;
  }
  return line;
}

}  // namespace

std::vector<Violation> validate(const Scenario& s) {
  std::vector<Violation> out;
  if (s.graph.n() != s.events.size()) {
    out.push_back({"event count", fmt::format("graph has {} vertices, {} events", s.graph.n(), s.events.size())});
    return out;
  }
  if (s.state.dim() != s.dim) {
    out.push_back({"dimension", fmt::format("state dim {} != {}", s.state.dim(), s.dim)});
    return out;
  }
  if (std::abs(s.state.norm() - 1.0) > numerics::kNormTolerance) {
    out.push_back({"state norm", fmt::format("|state| = {:.12g}", s.state.norm())});
  }
  for (const auto& e : s.events) {
    if (e.vec.dim() != s.dim) {
      out.push_back({"dimension", fmt::format("event {} has dim {}", e.label, e.vec.dim())});
      return out;
    }
    if (std::abs(e.vec.norm() - 1.0) > numerics::kNormTolerance) {
      out.push_back({"event norm", fmt::format("|{}| = {:.12g}", e.label, e.vec.norm())});
    }
  }
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    for (std::size_t j = i + 1; j < s.events.size(); ++j) {
      const double overlap = std::abs(numerics::inner_product(s.events[i].vec, s.events[j].vec));
      if (s.graph.adjacent(i, j) && overlap > kEdgeOverlapTolerance) {
        out.push_back({"edge orthogonality",
                       fmt::format("|<{}|{}>| = {:.3e}", s.events[i].label, s.events[j].label, overlap)});
      } else if (!s.graph.adjacent(i, j) && overlap <= kNonEdgeOverlap) {
        out.push_back({"non-edge overlap",
                       fmt::format("{} and {} are orthogonal but not declared exclusive", s.events[i].label,
                                   s.events[j].label)});
      }
    }
  }
  return out;
}

void require_valid(const Scenario& s) {
  const auto violations = validate(s);
  if (!violations.empty()) {
    throw Error(ErrorKind::InvariantViolation, violations.front().check + " (" + violations.front().detail + ")");
  }
}

StateVector chsh_state() {
  const double scale = 1.0 / (2.0 * std::sqrt(2.0 - kSqrt2));
  const double cross = -(1.0 - kSqrt2) * scale;
  // |00>, |01>, |10>, |11>
  return StateVector{scale, cross, cross, -scale};
}

StateVector nc_state() {
  const double a = std::sqrt(1.0 - 1.0 / kSqrt2);
  const double b = std::sqrt(3.0 / kSqrt2 - 2.0);
  return StateVector{a, a, a, b, 0.0};
}

Scenario build_chsh_scenario() {
  Scenario s;
  s.name = "chsh";
  s.dim = 4;
  s.state = chsh_state();
  for (std::size_t k = 0; k < kChshEvents.size(); ++k) {
    const auto& e = kChshEvents[k];
    s.events.push_back({"u" + std::to_string(k), fmt::format("{},{}|{},{}", e.a, e.b, e.i, e.j),
                        chsh_event_vector(e)});
  }
  s.graph = graph::circulant({8, {3, 4}});
  require_valid(s);
  return s;
}

Scenario build_nc_scenario() {
  Scenario s = make_nc(nc_vectors());
  require_valid(s);
  return s;
}

double sum_value(const Scenario& s) {
  double total = 0.0;
  for (const auto& e : s.events) total += numerics::probability(s.state, e.vec);
  return total;
}

numerics::Eigenpair quantum_max(const Scenario& s) {
  std::vector<StateVector> vecs;
  for (const auto& e : s.events) vecs.push_back(e.vec);
  return numerics::max_eigenpair(numerics::HermitianOperator::projector_sum(vecs));
}

ChshIdentity chsh_identity_check(const StateVector& state) {
  if (state.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "CHSH identity needs a dim-4 state");
  double s_events = 0.0;
  for (const auto& e : kChshEvents) s_events += numerics::probability(state, chsh_event_vector(e));

  // <psi| X (x) Y |psi> with X, Y in {sigma_z, sigma_x} as explicit 2x2 matrices.
  using Mat2 = std::array<std::array<double, 2>, 2>;
  const std::array<Mat2, 2> pauli{{{{{1.0, 0.0}, {0.0, -1.0}}}, {{{0.0, 1.0}, {1.0, 0.0}}}}};
  auto expectation = [&](int i, int j) {
    Complex sum = 0.0;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        const double m = pauli[i][r / 2][c / 2] * pauli[j][r % 2][c % 2];
        sum += std::conj(state[r]) * m * state[c];
      }
    }
    return sum.real();
  };
  const double correlator = expectation(0, 0) + expectation(1, 0) - expectation(1, 1) + expectation(0, 1);
  return {s_events, correlator, 2.0 + correlator / 2.0};
}

std::vector<std::vector<double>> exclusivity_table(const Scenario& s) {
  const std::size_t n = s.events.size();
  std::vector<std::vector<double>> table(n, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) table[j][i] = numerics::fidelity(s.events[j].vec, s.events[i].vec);
  }
  return table;
}

std::optional<std::size_t> MeasurementBasis::outcome_of(std::size_t event) const {
  for (std::size_t k = 0; k < member.size(); ++k) {
    if (member[k] == event) return k;
  }
  return std::nullopt;
}

std::vector<MeasurementBasis> chsh_setting_bases() {
  std::vector<MeasurementBasis> bases;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      MeasurementBasis basis;
      basis.name = fmt::format("{},{}", i, j);
      for (int a : {1, -1}) {
        for (int b : {1, -1}) {
          basis.vectors.push_back(numerics::tensor(local_eigenvector(i, a), local_eigenvector(j, b)));
          std::optional<std::size_t> member;
          for (std::size_t k = 0; k < kChshEvents.size(); ++k) {
            const auto& e = kChshEvents[k];
            if (e.i == i && e.j == j && e.a == a && e.b == b) member = k;
          }
          basis.member.push_back(member);
        }
      }
      bases.push_back(std::move(basis));
    }
  }
  return bases;
}

std::vector<MeasurementBasis> measurement_bases() {
  static constexpr std::array<const char*, 8> kNames{"I", "IV", "II", "V", "VI", "III", "VII", "VIII"};
  const auto v = nc_vectors();
  std::vector<MeasurementBasis> bases;
  for (std::size_t i = 0; i < 8; ++i) {
    MeasurementBasis basis;
    basis.name = kNames[i];
    for (std::size_t idx : {(i + 6) % 8, (i + 7) % 8, i}) {
      basis.vectors.push_back(v[idx]);
      basis.member.emplace_back(idx);
    }
    for (auto& w : numerics::orthonormal_complement(basis.vectors)) {
      basis.vectors.push_back(std::move(w));
      basis.member.emplace_back(std::nullopt);
    }
    bases.push_back(std::move(basis));
  }
  return bases;
}

const MeasurementBasis& basis_containing(const std::vector<MeasurementBasis>& bases, std::size_t event) {
  const MeasurementBasis* fallback = nullptr;
  for (const auto& b : bases) {
    if (!b.outcome_of(event)) continue;
    std::optional<std::size_t> last;
    for (const auto& m : b.member) {
      if (m) last = m;
    }
    if (last == event) return b;
    if (!fallback) fallback = &b;
  }
  if (!fallback) throw Error(ErrorKind::IndexOutOfRange, "no basis contains event " + std::to_string(event));
  return *fallback;
}

std::string to_json(const Scenario& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  j["dim"] = s.dim;
  j["state"] = amps_to_json(s.state);
  auto events = nlohmann::ordered_json::array();
  for (const auto& e : s.events) {
    nlohmann::ordered_json ev;
    ev["label"] = e.label;
    ev["notation"] = e.notation;
    ev["vec"] = amps_to_json(e.vec);
    events.push_back(std::move(ev));
  }
  j["events"] = std::move(events);
  auto edges = nlohmann::ordered_json::array();
  for (auto [a, b] : s.graph.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

Scenario from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(ErrorKind::ParseError, fmt::format("line {}: {}", line_of_offset(text, ex.byte), ex.what()));
  }
  Scenario s;
  try {
    s.name = field(j, "name", "scenario").get<std::string>();
    s.dim = field(j, "dim", "scenario").get<std::size_t>();
    s.state = amps_from_json(field(j, "state", "scenario"), "state");
    const auto& events = field(j, "events", "scenario");
    if (!events.is_array()) throw Error(ErrorKind::ParseError, "field 'events' must be an array");
    for (std::size_t k = 0; k < events.size(); ++k) {
      const std::string where = fmt::format("events[{}]", k);
      Event e;
      e.label = field(events[k], "label", where).get<std::string>();
      if (events[k].contains("notation")) e.notation = events[k].at("notation").get<std::string>();
      e.vec = amps_from_json(field(events[k], "vec", where), where + ".vec");
      s.events.push_back(std::move(e));
    }
    std::vector<graph::Edge> edges;
    const auto& jedges = field(j, "edges", "scenario");
    for (std::size_t k = 0; k < jedges.size(); ++k) {
      const auto& e = jedges[k];
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorKind::ParseError, fmt::format("field 'edges[{}]' must be [i, j]", k));
      }
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    s.graph = graph::ExclusivityGraph(s.events.size(), edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  } catch (const Error& ex) {
    if (ex.kind() == ErrorKind::ParseError || ex.kind() == ErrorKind::InvariantViolation) throw;
    throw Error(ErrorKind::ParseError, ex.what());
  }
  require_valid(s);
  return s;
}

namespace detail {

Scenario nc_scenario_with_v3_offset(double offset) {
  auto vecs = nc_vectors();
  std::vector<Complex> amps(vecs[3].amplitudes().begin(), vecs[3].amplitudes().end());
  amps[1] += offset;
  vecs[3] = StateVector(std::move(amps)).normalized();
  return make_nc(std::move(vecs));
}

}  // namespace detail

}  // namespace exbound::scenario
