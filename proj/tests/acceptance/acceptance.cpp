// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <functional>
#include <string>
#include <vector>

#include "exbound/eprinciple.hpp"
#include "exbound/exgraph.hpp"
#include "exbound/kernels.hpp"
#include "exbound/montecarlo.hpp"
#include "exbound/published.hpp"
#include "exbound/rng.hpp"
#include "exbound/scenario.hpp"

using namespace exbound;

namespace {

const double kSqrt2 = std::sqrt(2.0);

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

double round_to(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(x * scale) / scale;
}

std::size_t brute_force_alpha(const graph::ExclusivityGraph& g) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
    bool independent = true;
    for (std::size_t i = 0; i < g.n() && independent; ++i) {
      if ((s >> i & 1) && (g.neighbor_mask(i) & s)) independent = false;
    }
    if (independent) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

Outcome quantum_maxima() {
  const auto chsh = scenario::build_chsh_scenario();
  const auto nc = scenario::build_nc_scenario();
  const auto ms = scenario::quantum_max(chsh);
  const auto mr = scenario::quantum_max(nc);
  const double fs = numerics::fidelity(ms.vector, chsh.state);
  const double fr = numerics::fidelity(mr.vector, nc.state);
  const bool pass = std::abs(ms.value - (2 + kSqrt2)) <= 1e-9 && std::abs(mr.value - (8 - 4 * kSqrt2)) <= 1e-9 &&
                    fs >= 1 - 1e-9 && fr >= 1 - 1e-9;
  return {pass, fmt::format("lambda_S = {:.12f}, lambda_R = {:.12f}, fidelities {:.12f}, {:.12f}", ms.value, mr.value,
                            fs, fr)};
}

Outcome saturation() {
  const double product = (2 + kSqrt2) * (8 - 4 * kSqrt2);
  const double term = (2 + kSqrt2) / 8 * (1 - 1 / kSqrt2);
  const auto chsh = scenario::build_chsh_scenario();
  const auto nc = scenario::build_nc_scenario();
  bound::Probabilities ps, pr;
  for (std::size_t i = 0; i < 8; ++i) {
    ps[i] = numerics::probability(chsh.state, chsh.events[i].vec);
    pr[i] = numerics::probability(nc.state, nc.events[i].vec);
  }
  double worst = 0.0;
  for (const auto& m : bound::all_merge_maps()) worst = std::max(worst, std::abs(bound::w_value(m, ps, pr) - 1.0));
  const bool pass = std::abs(product - 8) <= 1e-8 && std::abs(term - 0.125) <= 1e-15 && worst <= 1e-12;
  return {pass, fmt::format("S*R = {:.12f}, per-term {:.15f}, max |W - 1| = {:.1e}", product, term, worst)};
}

Outcome nchv_bounds() {
  const auto a = brute_force_alpha(graph::circulant({8, {3, 4}}));
  const auto b = brute_force_alpha(graph::circulant({8, {1, 2}}));
  const auto a_bb = graph::independence_number(graph::circulant({8, {3, 4}}));
  const auto b_bb = graph::independence_number(graph::circulant({8, {1, 2}}));
  return {a == 3 && b == 2 && a_bb == a && b_bb == b,
          fmt::format("alpha(C8(3,4)) = {}, alpha(C8(1,2)) = {} (branch and bound: {}, {})", a, b, a_bb, b_bb)};
}

Outcome graph_structure() {
  const auto gs = graph::circulant({8, {3, 4}});
  const auto gr = graph::circulant({8, {1, 2}});
  const auto product = graph::disjunctive_product(gs, gr);
  const bool complement = graph::complement(gs) == gr;
  const bool transitive = graph::is_vertex_transitive(gs) && graph::is_vertex_transitive(gr);
  std::size_t cliques = 0;
  for (const auto& m : bound::all_merge_maps()) cliques += graph::is_clique(product, m.product_vertices()) ? 1 : 0;
  return {complement && transitive && cliques == 16,
          fmt::format("complement {}, transitive {}, {}/16 merge images are cliques of the {}-vertex product",
                      complement, transitive, cliques, product.n())};
}

Outcome table_reproduction() {
  const auto chsh = scenario::build_chsh_scenario();
  const auto nc = scenario::build_nc_scenario();
  std::size_t t1 = 0, t2 = 0;
  double shown_t1 = 0.0;
  for (const auto& e : chsh.events) {
    shown_t1 = round_to(numerics::probability(chsh.state, e.vec), 4);
    t1 += shown_t1 == published::kChshExpectedEvent ? 1 : 0;
  }
  for (const auto& e : nc.events) {
    t2 += round_to(numerics::probability(nc.state, e.vec), 4) == published::kNcExpectedEvent ? 1 : 0;
  }
  const double s = round_to(scenario::sum_value(chsh), 4);
  const double r = round_to(scenario::sum_value(nc), 4);
  const bool pass = t1 == 8 && t2 == 8 && s == published::kSExpected && r == published::kRExpected;
  return {pass, fmt::format("T1 {}/8 equal {} (computed rounds to {:.4f}), T2 {}/8 equal {}, S = {:.4f}, R = {:.4f}",
                            t1, published::kChshExpectedEvent, shown_t1, t2, published::kNcExpectedEvent, s, r)};
}

Outcome cross_bounds() {
  const auto xb = bound::cross_bounds({3.413, 0.013}, {2.335, 0.011});
  const bool pass = round_to(xb.r_bound.value, 3) == 2.344 && round_to(xb.r_bound.error, 3) == 0.009 &&
                    round_to(xb.s_bound.value, 3) == 3.426 && round_to(xb.s_bound.error, 3) == 0.016;
  return {pass, fmt::format("R <= {:.3f} +- {:.3f}, S <= {:.3f} +- {:.3f}", xb.r_bound.value, xb.r_bound.error,
                            xb.s_bound.value, xb.s_bound.error)};
}

Outcome exclusivity_tables() {
  std::string detail;
  bool pass = true;
  for (const auto& s : {scenario::build_chsh_scenario(), scenario::build_nc_scenario()}) {
    const auto t = scenario::exclusivity_table(s);
    std::size_t ones = 0, zeros = 0;
    for (std::size_t i = 0; i < 8; ++i) ones += std::abs(t[i][i] - 1.0) <= 1e-12 ? 1 : 0;
    for (auto [i, j] : s.graph.edges()) zeros += (t[i][j] <= 1e-12 && t[j][i] <= 1e-12) ? 1 : 0;
    const std::size_t expected_edges = s.name == "chsh" ? 12 : 16;
    pass = pass && ones == 8 && zeros == expected_edges && s.graph.edge_count() == expected_edges;
    detail += fmt::format("{}: {}/8 diagonal ones, {}/{} edge zeros; ", s.name, ones, zeros, expected_edges);
  }
  return {pass, detail};
}

Outcome basis_completion() {
  const auto bases = scenario::measurement_bases();
  const auto nc = scenario::build_nc_scenario();
  double gram = 0.0;
  for (const auto& b : bases) gram = std::max(gram, numerics::gram_deviation(b.vectors));
  double diff = 0.0;
  for (const auto& printed : published::kBases) {
    for (const auto& row : printed.rows) {
      if (row.state.front() != 'v') continue;
      const auto& v = nc.events[static_cast<std::size_t>(row.state[1] - '0')].vec;
      for (std::size_t k = 0; k < 5; ++k) diff = std::max(diff, std::abs(v[k].real() - row.components[k]));
    }
  }
  return {bases.size() == 8 && gram <= 1e-12 && diff <= 2e-3,
          fmt::format("{} bases, max Gram deviation {:.1e}, max printed v component diff {:.1e}", bases.size(), gram,
                      diff)};
}

Outcome simulator() {
  const auto chsh = mc::run_chsh(42, 200000, mc::NoiseModel(0.998, 4));
  const auto nc = mc::run_nc(42, 200000, mc::NoiseModel(0.995, 5));
  const double s = chsh.total.value;
  const double r = nc.total.value;
  std::size_t exceeding = 0;
  for (const auto& w : mc::run_w_report(chsh, nc)) exceeding += w.exceeds_bound ? 1 : 0;

  const kernels::CoverageConfig config{1000, 200, 200000, 0.998, 0.995, 5.0};
  const auto coverage = kernels::coverage_sweep_omp(config);
  std::size_t worst = config.trials;
  for (auto h : coverage.hits) worst = std::min(worst, h);
  const bool covered = 100 * worst >= 99 * config.trials;

  const bool pass = s >= 3.39 && s <= 3.43 && r >= 2.31 && r <= 2.36 && exceeding == 0 && covered;
  return {pass, fmt::format("S_hat = {:.4f} +- {:.4f}, R_hat = {:.4f} +- {:.4f}, {} W above 1 + 3 sigma, "
                            "worst event coverage {}/{} seeds within 5 sigma",
                            s, chsh.total.std_error, r, nc.total.std_error, exceeding, worst, config.trials)};
}

Outcome quantum_lemma() {
  const auto chsh = scenario::build_chsh_scenario();
  const auto nc = scenario::build_nc_scenario();
  auto family_of = [](const scenario::Scenario& s) {
    kernels::CliqueFamily f{s.dim, {}, graph::maximal_cliques(s.graph)};
    for (const auto& e : s.events) f.events.push_back(e.vec);
    return f;
  };
  kernels::CliqueFamily global{20, {}, {}};
  for (const auto& u : chsh.events) {
    for (const auto& v : nc.events) global.events.push_back(numerics::tensor(u.vec, v.vec));
  }
  for (const auto& m : bound::all_merge_maps()) global.cliques.push_back(m.product_vertices());

  const auto a = kernels::clique_sum_sweep_omp(family_of(chsh), 1000, 7);
  const auto b = kernels::clique_sum_sweep_omp(family_of(nc), 1000, 7);
  const auto c = kernels::clique_sum_sweep_omp(global, 1000, 7);
  const double worst = std::max({a.max_sum, b.max_sum, c.max_sum});
  return {worst <= 1 + 1e-12 && a.states == 1000 && c.evaluations == 16000,
          fmt::format("max clique sum {:.15f} over {} + {} + {} clique evaluations", worst, a.evaluations,
                      b.evaluations, c.evaluations)};
}

Outcome chsh_identity() {
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    auto rng = mc::make_stream({11, mc::Domain::RandomStates, k});
    const auto id = scenario::chsh_identity_check(mc::random_state(4, rng));
    worst = std::max(worst, std::abs(id.s_events - id.s_from_correlator));
  }
  return {worst <= 1e-10, fmt::format("max |S - (2 + C/2)| = {:.2e} over 1000 states", worst)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "quantum maxima and maximizing states", 1.0, quantum_maxima},
      {2, "saturation S*R = 8 and W = 1", 0.0, saturation},
      {3, "NCHV bounds by brute force", 0.1, nchv_bounds},
      {4, "complementary transitive graphs, product cliques", 0.0, graph_structure},
      {5, "ideal table columns at 4 decimals", 0.0, table_reproduction},
      {6, "cross-bounds at printed precision", 0.0, cross_bounds},
      {7, "exclusivity tables", 0.0, exclusivity_tables},
      {8, "basis completion", 0.0, basis_completion},
      {9, "simulator statistics", 30.0, simulator},
      {10, "exclusive events sum to at most one", 0.0, quantum_lemma},
      {11, "event form equals correlator form", 0.0, chsh_identity},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = out.pass;
    std::string timing = fmt::format("{:.3f} s", elapsed);
    if (c.time_limit_s > 0) {
      timing += fmt::format(" (limit {} s)", c.time_limit_s);
      pass = pass && elapsed < c.time_limit_s;
    }
    failed += pass ? 0 : 1;
    fmt::print("{} [{:2}] {}: {} [{}]\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail, timing);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
