#include "exbound/report.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <sstream>

#include "exbound/eprinciple.hpp"
#include "exbound/error.hpp"
#include "exbound/published.hpp"

namespace exbound::cli {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kChshEvent = (2.0 + kSqrt2) / 8.0;
const double kNcEvent = 1.0 - 1.0 / kSqrt2;
const double kSMax = 2.0 + kSqrt2;
const double kRMax = 8.0 - 4.0 * kSqrt2;

// Rounds to the printed precision of `decimals` places.
double round_to(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(x * scale) / scale;
}

std::string components(const numerics::StateVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.dim(); ++k) {
    if (k) out += ", ";
    out += fmt::format("{:.3f}", v[k].real());
  }
  return out + ")";
}

std::string components(const std::array<double, 5>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += fmt::format("{}", v[k]);
  }
  return out + ")";
}

numerics::StateVector to_state(const std::array<double, 5>& v) {
  return numerics::StateVector{v[0], v[1], v[2], v[3], v[4]};
}

void add(ReportBundle& b, std::string name, bool pass, std::string detail) {
  b.verdicts.push_back({std::move(name), pass, std::move(detail)});
}

std::vector<std::string> event_labels(const scenario::Scenario& s) {
  std::vector<std::string> out;
  for (const auto& e : s.events) out.push_back(e.notation);
  return out;
}

Table ideal_event_table(const scenario::Scenario& s, const std::array<published::Value, 8>& measured,
                        double printed_expected, const char* total_name, double printed_total) {
  Table t;
  t.title = s.name == "chsh" ? "Bell-CHSH events (ideal)" : "NC events (ideal)";
  t.columns = {"event", "notation", "expected", "expected_4dp", "published_expected", "published", "published_error"};
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const double p = numerics::probability(s.state, s.events[i].vec);
    t.rows.push_back({s.events[i].label, s.events[i].notation, p, fmt::format("{:.4f}", p), printed_expected,
                      measured[i].value, measured[i].error});
  }
  const double total = scenario::sum_value(s);
  const auto& m = s.name == "chsh" ? published::kS : published::kR;
  t.rows.push_back({total_name, "", total, fmt::format("{:.4f}", total), printed_total, m.value, m.error});
  return t;
}

template <std::size_t N>
Table ideal_check_table(const scenario::Scenario& s, const std::array<published::Check, N>& printed,
                        const char* title, const char* observable) {
  const auto table = scenario::exclusivity_table(s);
  Table t;
  t.title = title;
  t.columns = {"probability", "measured", "prepared", "ideal", "published", "published_error"};
  for (const auto& c : printed) {
    t.rows.push_back({fmt::format("p(1|{}{};{})", observable, c.measured, s.events[c.prepared].label), c.measured,
                      c.prepared, table[c.measured][c.prepared], c.value, c.error});
  }
  return t;
}

Table basis_table(ReportBundle& bundle) {
  const auto bases = scenario::measurement_bases();
  Table t;
  t.title = "NC measurement bases";
  t.columns = {"basis", "state", "computed", "published", "max_component_diff", "published_overlap_with_triple",
               "published_in_complement"};
  for (const auto& printed : published::kBases) {
    const scenario::MeasurementBasis* basis = nullptr;
    for (const auto& b : bases) {
      if (b.name == printed.name) basis = &b;
    }
    std::size_t completion = 3;
    for (std::size_t r = 0; r < printed.rows.size(); ++r) {
      const auto& row = printed.rows[r];
      if (row.state.front() == 'v') {
        const std::size_t idx = static_cast<std::size_t>(row.state[1] - '0');
        const auto& v = basis->vectors[*basis->outcome_of(idx)];
        double diff = 0.0;
        for (std::size_t k = 0; k < 5; ++k) diff = std::max(diff, std::abs(v[k].real() - row.components[k]));
        t.rows.push_back({std::string(printed.name), std::string(row.state), components(v), components(row.components),
                          diff, nullptr, nullptr});
        continue;
      }
      // Printed completion vector: how far it is from being orthogonal to the
      // basis triple, and how much of it lies in the computed complement.
      const auto w = to_state(row.components);
      double overlap = 0.0;
      for (std::size_t k = 0; k < 3; ++k) {
        overlap = std::max(overlap, std::abs(numerics::inner_product(basis->vectors[k], w)) / w.norm());
      }
      double in_complement = 0.0;
      for (std::size_t k = 3; k < 5; ++k) in_complement += numerics::fidelity(basis->vectors[k], w);
      in_complement = std::sqrt(in_complement) / w.norm();
      t.rows.push_back({std::string(printed.name), std::string(row.state), components(basis->vectors[completion]),
                        components(row.components), nullptr, overlap, in_complement});
      if (overlap > numerics::kRoundedDataTolerance) {
        bundle.notes.push_back(fmt::format("basis {}: published {} overlaps the basis triple by {:.3f} (> {}); "
                                           "the computed completion is used instead",
                                           printed.name, row.state, overlap, numerics::kRoundedDataTolerance));
      }
      ++completion;
    }
  }
  return t;
}

Table ideal_w_table() {
  Table t;
  t.title = "Exclusivity inequalities W1..W16 (ideal)";
  t.columns = {"index"};
  for (int i = 0; i < 8; ++i) t.columns.push_back(fmt::format("sigma{}", i));
  for (const char* c : {"value", "uncertainty", "published", "published_error"}) t.columns.push_back(c);
  bound::Probabilities ps, pr, zero{};
  ps.fill(kChshEvent);
  pr.fill(kNcEvent);
  for (const auto& r : bound::w_reports(ps, zero, pr, zero)) {
    std::vector<Cell> row{r.index};
    for (auto s : r.sigma) row.push_back(s);
    row.push_back(r.value);
    row.push_back(r.uncertainty);
    row.push_back(published::kW[r.index - 1].value);
    row.push_back(published::kW[r.index - 1].error);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table simulated_event_table(const mc::SimulatedRun& run, const std::array<published::Value, 8>& measured,
                            double printed_expected, const char* total_name, const published::Value& printed_total) {
  Table t;
  t.title = fmt::format("{} events (simulated: seed {}, shots {}, V = {})", run.experiment == "chsh" ? "Bell-CHSH" : "NC",
                        run.seed, run.shots, run.visibility);
  t.columns = {"event", "notation", "simulated", "std_error", "noisy_expected", "expected", "published",
               "published_error", "published_expected"};
  double ideal_total = 0.0, noisy_total = 0.0;
  for (std::size_t i = 0; i < run.estimates.size(); ++i) {
    const auto& e = run.estimates[i];
    t.rows.push_back({e.label, e.notation, e.p_hat, e.std_error, e.noisy_expected, e.ideal, measured[i].value,
                      measured[i].error, printed_expected});
    ideal_total += e.ideal;
    noisy_total += e.noisy_expected;
  }
  t.rows.push_back({total_name, "", run.total.value, run.total.std_error, noisy_total, ideal_total, printed_total.value,
                    printed_total.error, run.experiment == "chsh" ? published::kSExpected : published::kRExpected});
  return t;
}

template <std::size_t N>
Table simulated_check_table(const mc::ExclusivityChecks& checks, const scenario::Scenario& s,
                            const std::array<published::Check, N>& printed, const char* title, const char* observable) {
  Table t;
  t.title = title;
  t.columns = {"probability", "measured", "prepared", "simulated", "std_error", "ideal", "published", "published_error"};
  for (const auto& c : printed) {
    const auto& cell = checks.cells[c.measured][c.prepared];
    t.rows.push_back({fmt::format("p(1|{}{};{})", observable, c.measured, s.events[c.prepared].label), c.measured,
                      c.prepared, cell.p_hat, cell.std_error, cell.ideal, c.value, c.error});
  }
  return t;
}

Table simulated_w_table(const std::vector<bound::WReport>& reports) {
  Table t;
  t.title = "Exclusivity inequalities W1..W16 (simulated)";
  t.columns = {"index"};
  for (int i = 0; i < 8; ++i) t.columns.push_back(fmt::format("sigma{}", i));
  for (const char* c : {"value", "uncertainty", "exceeds_3sigma", "published", "published_error"}) {
    t.columns.push_back(c);
  }
  for (const auto& r : reports) {
    std::vector<Cell> row{r.index};
    for (auto s : r.sigma) row.push_back(s);
    row.push_back(r.value);
    row.push_back(r.uncertainty);
    row.push_back(r.exceeds_bound);
    row.push_back(published::kW[r.index - 1].value);
    row.push_back(published::kW[r.index - 1].error);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string format_cell(const Cell& c) {
  if (c.is_null()) return "-";
  if (c.is_string()) return c.get<std::string>();
  if (c.is_boolean()) return c.get<bool>() ? "yes" : "no";
  if (c.is_number_integer() || c.is_number_unsigned()) return c.dump();
  return fmt::format("{:.4f}", c.get<double>());
}

std::string csv_field(const Cell& c) {
  std::string raw;
  if (c.is_null()) {
    raw = "";
  } else if (c.is_string()) {
    raw = c.get<std::string>();
  } else if (c.is_number_float()) {
    raw = fmt::format("{}", c.get<double>());
  } else {
    raw = c.dump();
  }
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char ch : raw) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

}  // namespace

bool ReportBundle::all_pass() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

Which parse_which(std::string_view text) {
  if (text == "chsh") return Which::Chsh;
  if (text == "nc") return Which::Nc;
  if (text == "both") return Which::Both;
  throw Error(ErrorKind::InvalidFlag, fmt::format("unknown experiment '{}' (chsh|nc|both)", text));
}

Figure parse_figure(std::string_view text) {
  if (text == "f1b") return Figure::F1b;
  if (text == "f1c") return Figure::F1c;
  if (text == "f4") return Figure::F4;
  throw Error(ErrorKind::InvalidFlag, fmt::format("unknown graph '{}' (f1b|f1c|f4)", text));
}

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  if (text == "dot") return Format::Dot;
  throw Error(ErrorKind::InvalidFlag, fmt::format("unknown format '{}' (text|csv|json|dot)", text));
}

LabeledGraph figure_graph(Figure figure) {
  const auto chsh = scenario::build_chsh_scenario();
  const auto nc = scenario::build_nc_scenario();
  switch (figure) {
    case Figure::F1b: return {"F1b", chsh.graph, event_labels(chsh)};
    case Figure::F1c: return {"F1c", nc.graph, event_labels(nc)};
    case Figure::F4: break;
  }
  LabeledGraph out{"F4", graph::disjunctive_product(chsh.graph, nc.graph), {}};
  for (const auto& u : chsh.events) {
    for (const auto& v : nc.events) out.labels.push_back(u.notation + " / " + v.notation);
  }
  return out;
}

std::string export_graph(Figure figure, Format format) {
  const auto g = figure_graph(figure);
  if (format == Format::Dot) return graph::to_dot(g.graph, g.labels, g.name);
  if (format == Format::Json) return graph::to_json(g.graph, g.labels);
  throw Error(ErrorKind::InvalidFlag, "graphs export as dot or json");
}

ReportBundle cmd_verify(const VerifyOptions& options) {
  ReportBundle b;
  const auto chsh = scenario::build_chsh_scenario();
  const auto nc = options.perturb_v3 ? scenario::detail::nc_scenario_with_v3_offset(1e-3) : scenario::build_nc_scenario();

  // Graph structure.
  const auto f1b = graph::circulant({8, {3, 4}});
  const auto f1c = graph::circulant({8, {1, 2}});
  const auto f4 = graph::disjunctive_product(f1b, f1c);
  b.graphs = {{"F1b", f1b}, {"F1c", f1c}, {"F4", f4}};
  add(b, "complement(F1b) == F1c", graph::complement(f1b) == f1c,
      fmt::format("{} + {} edges of K8's 28", f1b.edge_count(), f1c.edge_count()));
  add(b, "F1b vertex-transitive", graph::is_vertex_transitive(f1b), "");
  add(b, "F1c vertex-transitive", graph::is_vertex_transitive(f1c), "");
  const auto alpha_b = graph::independence_number(f1b);
  const auto alpha_c = graph::independence_number(f1c);
  add(b, "alpha(F1b) == 3 (CHSH NCHV bound)", alpha_b == 3, fmt::format("alpha = {}", alpha_b));
  add(b, "alpha(F1c) == 2 (NC NCHV bound)", alpha_c == 2, fmt::format("alpha = {}", alpha_c));
  add(b, "F4 has 64 vertices, 1408 edges", f4.n() == 64 && f4.edge_count() == 1408,
      fmt::format("{} vertices, {} edges", f4.n(), f4.edge_count()));

  // Orthogonality realizes the declared graphs.
  for (const auto* s : {&chsh, &nc}) {
    const auto violations = scenario::validate(*s);
    std::string detail = violations.empty() ? "orthogonal exactly on declared edges" : "";
    for (const auto& v : violations) detail += v.check + ": " + v.detail + "; ";
    add(b, s->name + " orthogonality == declared graph", violations.empty(), detail);
  }

  // Ideal event probabilities.
  auto event_check = [&](const scenario::Scenario& s, double expected, const char* name) {
    double worst = 0.0;
    for (const auto& e : s.events) {
      worst = std::max(worst, std::abs(numerics::probability(s.state, e.vec) - expected));
    }
    add(b, name, worst <= 1e-12, fmt::format("max |p - {:.12f}| = {:.2e}", expected, worst));
  };
  event_check(chsh, kChshEvent, "T1 expected column = (2+sqrt2)/8");
  event_check(nc, kNcEvent, "T2 expected column = 1-1/sqrt2");
  const double s_val = scenario::sum_value(chsh);
  const double r_val = scenario::sum_value(nc);
  add(b, "S = 3.4142", round_to(s_val, 4) == published::kSExpected, fmt::format("S = {:.10f}", s_val));
  add(b, "R = 2.3431", round_to(r_val, 4) == published::kRExpected, fmt::format("R = {:.10f}", r_val));

  // Quantum maxima.
  const auto max_s = scenario::quantum_max(chsh);
  const auto max_r = scenario::quantum_max(nc);
  const double fid_s = numerics::fidelity(max_s.vector, chsh.state);
  const double fid_r = numerics::fidelity(max_r.vector, nc.state);
  add(b, "S_max = 2+sqrt2, attained by psi", std::abs(max_s.value - kSMax) <= 1e-9 && fid_s >= 1 - 1e-9,
      fmt::format("lambda = {:.12f}, fidelity = {:.12f}", max_s.value, fid_s));
  add(b, "R_max = 8-4sqrt2, attained by phi", std::abs(max_r.value - kRMax) <= 1e-9 && fid_r >= 1 - 1e-9,
      fmt::format("lambda = {:.12f}, fidelity = {:.12f}", max_r.value, fid_r));
  const double saturation = max_s.value * max_r.value;
  add(b, "S_max * R_max = 8", std::abs(saturation - 8.0) <= 1e-8, fmt::format("S_max*R_max = {:.9f}", saturation));
  const auto identity = scenario::chsh_identity_check(chsh.state);
  add(b, "S = 2 + C/2 at psi", std::abs(identity.s_events - identity.s_from_correlator) <= 1e-10,
      fmt::format("S = {:.12f}, C = {:.12f}", identity.s_events, identity.correlator));

  // Sixteen merged inequalities.
  bound::Probabilities ps, pr;
  for (std::size_t i = 0; i < 8; ++i) {
    ps[i] = numerics::probability(chsh.state, chsh.events[i].vec);
    pr[i] = numerics::probability(nc.state, nc.events[i].vec);
  }
  const auto maps = bound::all_merge_maps();
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const double w = bound::w_value(maps[k], ps, pr);
    const bool clique = bound::clique_certificate(maps[k], f4);
    add(b, fmt::format("W{} = 1 on an 8-clique", k + 1), std::abs(w - 1.0) <= 1e-12 && clique,
        fmt::format("W = {:.15f}, clique = {}", w, clique));
  }
  const auto pb = bound::product_bound(ps, pr);
  add(b, "sum of W = 2 S R", std::abs(pb.w_sum - 2 * pb.product) <= 1e-9,
      fmt::format("sum W = {:.12f}, S*R = {:.12f}", pb.w_sum, pb.product));

  // Cross-bounds from the measured values.
  const auto xb = bound::cross_bounds({published::kS.value, published::kS.error},
                                      {published::kR.value, published::kR.error});
  add(b, "R <= 8/S_exp = 2.344 +- 0.009",
      round_to(xb.r_bound.value, 3) == published::kRBound.value && round_to(xb.r_bound.error, 3) == published::kRBound.error,
      fmt::format("{:.5f} +- {:.5f}", xb.r_bound.value, xb.r_bound.error));
  add(b, "S <= 8/R_exp = 3.426 +- 0.016",
      round_to(xb.s_bound.value, 3) == published::kSBound.value && round_to(xb.s_bound.error, 3) == published::kSBound.error,
      fmt::format("{:.5f} +- {:.5f}", xb.s_bound.value, xb.s_bound.error));

  // Exclusivity tables.
  for (const auto* s : {&chsh, &nc}) {
    const auto table = scenario::exclusivity_table(*s);
    double diag = 0.0, edge = 0.0;
    for (std::size_t i = 0; i < 8; ++i) diag = std::max(diag, std::abs(table[i][i] - 1.0));
    for (auto [i, j] : s->graph.edges()) edge = std::max({edge, table[i][j], table[j][i]});
    add(b, s->name + " exclusivity table: diagonal 1, edges 0", diag <= 1e-12 && edge <= 1e-12,
        fmt::format("max |diag - 1| = {:.1e}, max edge = {:.1e}", diag, edge));
  }

  // Measurement bases.
  double gram = 0.0;
  for (const auto& basis : scenario::measurement_bases()) gram = std::max(gram, numerics::gram_deviation(basis.vectors));
  add(b, "NC bases orthonormal", gram <= 1e-12, fmt::format("max Gram deviation = {:.1e}", gram));

  b.tables["T1"] = ideal_event_table(chsh, published::kChshProbabilities, published::kChshExpectedEvent, "S",
                                     published::kSExpected);
  b.tables["T2"] = ideal_event_table(nc, published::kNcProbabilities, published::kNcExpectedEvent, "R",
                                     published::kRExpected);
  b.tables["T3"] = ideal_w_table();
  b.tables["T4"] = ideal_check_table(chsh, published::kChshChecks, "Bell-CHSH exclusivity checks (ideal)", "mu");
  b.tables["T5"] = basis_table(b);
  b.tables["T6"] = ideal_check_table(nc, published::kNcChecks, "NC exclusivity checks (ideal)", "mu'");

  double v_diff = 0.0;
  for (const auto& row : b.tables["T5"].rows) {
    if (row[4].is_number()) v_diff = std::max(v_diff, row[4].get<double>());
  }
  add(b, "published v components match within 2e-3", v_diff <= 2e-3, fmt::format("max diff = {:.2e}", v_diff));

  if (round_to(kChshEvent, 4) != published::kChshExpectedEvent) {
    b.notes.push_back(fmt::format("(2+sqrt2)/8 = {:.7f} displays as {:.4f}; the published expected column prints {}",
                                  kChshEvent, kChshEvent, published::kChshExpectedEvent));
  }
  bound::Probabilities ms, es, mr, er;
  for (std::size_t i = 0; i < 8; ++i) {
    ms[i] = published::kChshProbabilities[i].value;
    es[i] = published::kChshProbabilities[i].error;
    mr[i] = published::kNcProbabilities[i].value;
    er[i] = published::kNcProbabilities[i].error;
  }
  const auto w1 = bound::w_reports(ms, es, mr, er).front();
  b.notes.push_back(fmt::format("W1 from the published event tables = {:.6f} +- {:.4f} (first-order); printed {} +- {}",
                                w1.value, w1.uncertainty, published::kW[0].value, published::kW[0].error));
  const auto ref = bound::reference_bounds();
  b.notes.push_back(fmt::format("earlier bounds: 3sqrt3/2 = {:.4f} (printed as {}), 8/sqrt5 = {:.4f}",
                                ref.r_two_copies, ref.r_two_copies_printed, ref.s_two_copies));
  return b;
}

ReportBundle cmd_simulate(const SimulateOptions& options) {
  if (options.shots < 0) throw Error(ErrorKind::InvalidFlag, "--shots must be >= 0");
  if (!(options.visibility >= 0.0 && options.visibility <= 1.0)) {
    throw Error(ErrorKind::InvalidFlag, "--visibility must lie in [0, 1]");
  }
  ReportBundle b;
  const bool do_chsh = options.which != Which::Nc;
  const bool do_nc = options.which != Which::Chsh;
  const auto chsh = scenario::build_chsh_scenario();
  const auto nc = scenario::build_nc_scenario();
  const mc::NoiseModel noise4(options.visibility, 4);
  const mc::NoiseModel noise5(options.visibility, 5);

  Table bounds;
  bounds.title = "Bounds from simulated values";
  bounds.columns = {"quantity", "value", "error", "published", "published_error"};

  std::optional<mc::SimulatedRun> chsh_run, nc_run;
  if (do_chsh) {
    chsh_run = mc::run_chsh(options.seed, options.shots, noise4);
    b.tables["T1"] = simulated_event_table(*chsh_run, published::kChshProbabilities, published::kChshExpectedEvent,
                                           "S", published::kS);
    const auto checks = mc::run_exclusivity_checks(chsh, options.seed, options.shots, noise4);
    b.tables["T4"] = simulated_check_table(checks, chsh, published::kChshChecks,
                                           "Bell-CHSH exclusivity checks (simulated)", "mu");
    bounds.rows.push_back({"S_hat", chsh_run->total.value, chsh_run->total.std_error, published::kS.value,
                           published::kS.error});
  }
  if (do_nc) {
    nc_run = mc::run_nc(options.seed, options.shots, noise5);
    b.tables["T2"] =
        simulated_event_table(*nc_run, published::kNcProbabilities, published::kNcExpectedEvent, "R", published::kR);
    const auto checks = mc::run_exclusivity_checks(nc, options.seed, options.shots, noise5);
    b.tables["T6"] =
        simulated_check_table(checks, nc, published::kNcChecks, "NC exclusivity checks (simulated)", "mu'");
    bounds.rows.push_back({"R_hat", nc_run->total.value, nc_run->total.std_error, published::kR.value,
                           published::kR.error});
  }
  // 8/x needs x > 0; a run with S_hat = 0 cannot bound anything.
  if (chsh_run && chsh_run->total.value > 0.0) {
    const auto xb = bound::cross_bounds({chsh_run->total.value, chsh_run->total.std_error}, {1.0, 0.0});
    bounds.rows.push_back({"R <= 8/S_hat", xb.r_bound.value, xb.r_bound.error, published::kRBound.value,
                           published::kRBound.error});
  }
  if (nc_run && nc_run->total.value > 0.0) {
    const auto xb = bound::cross_bounds({1.0, 0.0}, {nc_run->total.value, nc_run->total.std_error});
    bounds.rows.push_back({"S <= 8/R_hat", xb.s_bound.value, xb.s_bound.error, published::kSBound.value,
                           published::kSBound.error});
  }
  if (chsh_run && nc_run) {
    const auto reports = mc::run_w_report(*chsh_run, *nc_run);
    b.tables["T3"] = simulated_w_table(reports);
    bool none_exceed = true;
    for (const auto& r : reports) none_exceed = none_exceed && !r.exceeds_bound;
    add(b, "no simulated W exceeds 1 by 3 sigma", none_exceed, "");
    const double sr = chsh_run->total.value * nc_run->total.value;
    bounds.rows.push_back({"S_hat * R_hat", sr, nullptr, published::kS.value * published::kR.value, nullptr});
  }
  b.tables["bounds"] = std::move(bounds);
  return b;
}

ReportBundle cmd_report(const VerifyOptions& verify, const SimulateOptions& simulate) {
  auto b = cmd_verify(verify);
  auto sim = cmd_simulate(simulate);
  for (auto& [id, table] : sim.tables) b.tables[id] = std::move(table);
  for (auto& v : sim.verdicts) b.verdicts.push_back(std::move(v));
  for (auto& n : sim.notes) b.notes.push_back(std::move(n));
  return b;
}

scenario::Scenario scenario_by_name(std::string_view which) {
  if (which == "chsh") return scenario::build_chsh_scenario();
  if (which == "nc") return scenario::build_nc_scenario();
  throw Error(ErrorKind::InvalidFlag, fmt::format("unknown scenario '{}' (chsh|nc)", which));
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::IoFailure, "cannot open " + path.string() + " for writing");
  os << contents;
  if (!os) throw Error(ErrorKind::IoFailure, "write failed for " + path.string());
}

void save_scenario(const scenario::Scenario& s, const std::filesystem::path& path) {
  write_file(path, scenario::to_json(s));
}

scenario::Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::IoFailure, "cannot open " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return scenario::from_json(ss.str());
}

std::string render_text(const ReportBundle& bundle) {
  std::ostringstream os;
  for (const auto& [id, table] : bundle.tables) {
    os << "== " << id << ": " << table.title << " ==\n";
    std::vector<std::size_t> width(table.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t c = 0; c < table.columns.size(); ++c) width[c] = table.columns[c].size();
    for (const auto& row : table.rows) {
      std::vector<std::string> line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line.push_back(format_cell(row[c]));
        width[c] = std::max(width[c], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) os << fmt::format("{:<{}}  ", table.columns[c], width[c]);
    os << '\n';
    for (const auto& line : cells) {
      for (std::size_t c = 0; c < line.size(); ++c) os << fmt::format("{:<{}}  ", line[c], width[c]);
      os << '\n';
    }
    os << '\n';
  }
  if (!bundle.verdicts.empty()) {
    os << "== verdicts ==\n";
    for (const auto& v : bundle.verdicts) {
      os << (v.pass ? "[PASS] " : "[FAIL] ") << v.name;
      if (!v.detail.empty()) os << "  (" << v.detail << ")";
      os << '\n';
    }
  }
  for (const auto& n : bundle.notes) os << "note: " << n << '\n';
  return os.str();
}

std::string to_json(const ReportBundle& bundle) {
  nlohmann::ordered_json j;
  auto& tables = j["tables"] = nlohmann::ordered_json::object();
  for (const auto& [id, table] : bundle.tables) {
    nlohmann::ordered_json t;
    t["title"] = table.title;
    t["columns"] = table.columns;
    t["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) t["rows"].push_back(row);
    tables[id] = std::move(t);
  }
  auto& graphs = j["graphs"] = nlohmann::ordered_json::object();
  for (const auto& [id, g] : bundle.graphs) graphs[id] = nlohmann::ordered_json::parse(graph::to_json(g));
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : bundle.verdicts) {
    j["verdicts"].push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  }
  j["notes"] = bundle.notes;
  return j.dump(2) + "\n";
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << csv_field(table.columns[c]);
  os << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
    os << "\r\n";
  }
  return os.str();
}

void write_bundle(const ReportBundle& bundle, const std::filesystem::path& out, Format format) {
  switch (format) {
    case Format::Json:
      write_file(out, to_json(bundle));
      return;
    case Format::Csv: {
      std::error_code ec;
      std::filesystem::create_directories(out, ec);
      if (ec) throw Error(ErrorKind::IoFailure, "cannot create " + out.string() + ": " + ec.message());
      for (const auto& [id, table] : bundle.tables) write_file(out / (id + ".csv"), to_csv(table));
      return;
    }
    case Format::Text:
      write_file(out, render_text(bundle));
      return;
    case Format::Dot:
      break;
  }
  throw Error(ErrorKind::InvalidFlag, "reports are written as text, csv or json");
}

}  // namespace exbound::cli
