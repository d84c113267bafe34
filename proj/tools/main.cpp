// exbound: rebuilds the tables and exclusivity graphs, verifies the ideal
// values and simulates both experiments.
//
// Exit status: 0 when every verdict passes, 1 on a failed verdict or a
// runtime error, 2 on a usage error.

#include <CLI11.hpp>
#include <fmt/format.h>
#include <iostream>
#include <optional>

#include "exbound/error.hpp"
#include "exbound/report.hpp"

namespace {

using namespace exbound;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string path;
  std::string format = "text";
};

void add_output_flags(CLI::App* cmd, Output& out, std::vector<std::string> formats) {
  cmd->add_option("--out", out.path, "Output path (a directory for csv); stdout when omitted");
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember(formats));
}

void add_simulation_flags(CLI::App* cmd, cli::SimulateOptions& options) {
  cmd->add_option("--seed", options.seed, "Master seed (64-bit)");
  cmd->add_option("--shots", options.shots, "Shots per setting; 0 selects the analytic mode")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--visibility", options.visibility, "White-noise visibility V")->check(CLI::Range(0.0, 1.0));
}

int emit(const cli::ReportBundle& bundle, const Output& out) {
  const auto format = cli::parse_format(out.format);
  if (!out.path.empty()) {
    cli::write_bundle(bundle, out.path, format);
    std::cerr << fmt::format("wrote {}\n", out.path);
  } else if (format == cli::Format::Json) {
    std::cout << cli::to_json(bundle);
  } else if (format == cli::Format::Csv) {
    bool first = true;
    for (const auto& [id, table] : bundle.tables) {
      if (!first) std::cout << '\n';
      first = false;
      std::cout << cli::to_csv(table);
    }
  } else {
    std::cout << cli::render_text(bundle);
  }
  for (const auto& v : bundle.verdicts) {
    if (!v.pass) std::cerr << fmt::format("FAIL: {} ({})\n", v.name, v.detail);
  }
  return bundle.all_pass() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exclusivity-principle bound S * R <= 8 for a Bell-CHSH and a contextuality experiment"};
  app.require_subcommand(1);

  cli::VerifyOptions verify_options;
  Output verify_out;
  auto* verify = app.add_subcommand("verify", "Check every ideal-value claim");
  verify->add_flag("--perturb-v3", verify_options.perturb_v3, "Nudge v3 off its exact direction (fault injection)");
  add_output_flags(verify, verify_out, {"text", "csv", "json"});

  cli::SimulateOptions sim_options;
  std::string which = "both";
  Output sim_out;
  auto* simulate = app.add_subcommand("simulate", "Finite-statistics emulation of the experiments");
  simulate->add_option("which", which, "chsh | nc | both")->check(CLI::IsMember({"chsh", "nc", "both"}));
  add_simulation_flags(simulate, sim_options);
  add_output_flags(simulate, sim_out, {"text", "csv", "json"});

  std::string figure;
  Output graph_out{"", "dot"};
  auto* export_graph = app.add_subcommand("export-graph", "Write an exclusivity graph");
  export_graph->add_option("which", figure, "f1b | f1c | f4")->required()->check(CLI::IsMember({"f1b", "f1c", "f4"}));
  add_output_flags(export_graph, graph_out, {"dot", "json"});

  auto* scenario_cmd = app.add_subcommand("scenario", "Save or load a scenario file");
  scenario_cmd->require_subcommand(1);
  std::string save_which, save_path, load_path;
  auto* save = scenario_cmd->add_subcommand("save", "Write a built-in scenario as JSON");
  save->add_option("which", save_which, "chsh | nc")->required()->check(CLI::IsMember({"chsh", "nc"}));
  save->add_option("--out", save_path, "Destination file")->required();
  auto* load = scenario_cmd->add_subcommand("load", "Read and validate a scenario file");
  load->add_option("path", load_path, "Scenario JSON")->required();

  cli::VerifyOptions report_verify;
  cli::SimulateOptions report_sim;
  Output report_out;
  auto* report = app.add_subcommand("report", "Verify and simulate, with every table");
  add_simulation_flags(report, report_sim);
  add_output_flags(report, report_out, {"text", "csv", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return emit(cli::cmd_verify(verify_options), verify_out);
    if (*simulate) {
      sim_options.which = cli::parse_which(which);
      return emit(cli::cmd_simulate(sim_options), sim_out);
    }
    if (*report) return emit(cli::cmd_report(report_verify, report_sim), report_out);
    if (*export_graph) {
      const auto fig = cli::parse_figure(figure);
      const auto text = cli::export_graph(fig, cli::parse_format(graph_out.format));
      if (graph_out.path.empty()) {
        std::cout << text;
      } else {
        cli::write_file(graph_out.path, text);
      }
      const auto g = cli::figure_graph(fig);
      std::cerr << fmt::format("{}: {} vertices, {} edges\n", g.name, g.graph.n(), g.graph.edge_count());
      return kExitOk;
    }
    if (*save) {
      cli::save_scenario(cli::scenario_by_name(save_which), save_path);
      std::cerr << fmt::format("wrote {}\n", save_path);
      return kExitOk;
    }
    if (*load) {
      const auto s = cli::load_scenario(load_path);
      std::cout << fmt::format("{}: dim {}, {} events, {} edges, sum = {:.10f}\n", s.name, s.dim, s.events.size(),
                               s.graph.edge_count(), scenario::sum_value(s));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidFlag ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
