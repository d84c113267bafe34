#pragma once

// Report generation behind the command-line tool: every table and figure graph
// rebuilt from first principles, the verification verdicts, and the file
// formats (text, CSV, JSON, DOT).

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "exbound/exgraph.hpp"
#include "exbound/montecarlo.hpp"
#include "exbound/scenario.hpp"

namespace exbound::cli {

using Cell = nlohmann::ordered_json;

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Verdict {
  std::string name;
  bool pass;
  std::string detail;
};

struct ReportBundle {
  std::map<std::string, Table> tables;  // "T1" ... "T6", "bounds"
  std::map<std::string, graph::ExclusivityGraph> graphs;  // "F1b", "F1c", "F4"
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;

  bool all_pass() const;
};

struct VerifyOptions {
  // Fault injection: nudge v3 off its exact direction.
  bool perturb_v3 = false;
};

enum class Which { Chsh, Nc, Both };
Which parse_which(std::string_view text);

struct SimulateOptions {
  std::uint64_t seed = 42;
  std::int64_t shots = mc::kDefaultShots;
  double visibility = 1.0;
  Which which = Which::Both;
};

ReportBundle cmd_verify(const VerifyOptions& options = {});
ReportBundle cmd_simulate(const SimulateOptions& options);
// Verify plus simulate, with every table T1..T6.
ReportBundle cmd_report(const VerifyOptions& verify, const SimulateOptions& simulate);

enum class Figure { F1b, F1c, F4 };
Figure parse_figure(std::string_view text);

enum class Format { Text, Csv, Json, Dot };
Format parse_format(std::string_view text);

struct LabeledGraph {
  std::string name;
  graph::ExclusivityGraph graph;
  std::vector<std::string> labels;
};

LabeledGraph figure_graph(Figure figure);
std::string export_graph(Figure figure, Format format);

scenario::Scenario scenario_by_name(std::string_view which);
void save_scenario(const scenario::Scenario& s, const std::filesystem::path& path);
scenario::Scenario load_scenario(const std::filesystem::path& path);

std::string render_text(const ReportBundle& bundle);
std::string to_json(const ReportBundle& bundle);
std::string to_csv(const Table& table);

// Csv: one <id>.csv per table inside directory `out`. Json: one file.
void write_bundle(const ReportBundle& bundle, const std::filesystem::path& out, Format format);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace exbound::cli
