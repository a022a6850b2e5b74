#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "oscnet/dynamics.hpp"
#include "oscnet/graph.hpp"
#include "oscnet/polarization.hpp"

namespace oscnet {

/// Shortest round-trip decimal form, locale-independent.
std::string format_double(double value);

/// FNV-1a hash of the canonical edge list, as a 16-digit hex string.
std::string graph_hash(const WeightedDigraph& g);

// ---------------------------------------------------------------------------
// Graph files. Two interchangeable formats:
//   JSON:      {"n": 4, "edges": [[0, 1, 1.0], ...]}
//   edge list: first non-comment line the node count, then "i j w" lines.
// Indices are 0-based, weights decimal floats. load_graph sniffs the format.
// ---------------------------------------------------------------------------
WeightedDigraph parse_graph_json(const std::string& text);
WeightedDigraph parse_graph_edgelist(const std::string& text);
std::string graph_to_json(const WeightedDigraph& g);
std::string graph_to_edgelist(const WeightedDigraph& g);
WeightedDigraph load_graph(const std::filesystem::path& path);
void save_graph(const WeightedDigraph& g, const std::filesystem::path& path);  // by extension

// Row-major CSV of decimal floats.
void write_matrix_csv(const Matrix& m, const std::filesystem::path& path);
Matrix read_matrix_csv(const std::filesystem::path& path);

// Portable bitmap (P1) 0/1 grid of a block pattern.
void write_pattern_pbm(const BoolMatrix& pattern, const std::filesystem::path& path);

// Trajectories: CSV with header t,re(x_0),im(x_0),... over the projected
// states; JSON variant carries the meta block and the full state record.
std::string trajectory_to_csv(const TrajectoryRecord& trajectory);
void write_trajectory_csv(const TrajectoryRecord& trajectory,
                          const std::filesystem::path& path);
TrajectoryRecord read_trajectory_csv(const std::filesystem::path& path);
nlohmann::json trajectory_to_json(const TrajectoryRecord& trajectory);
void write_trajectory_json(const TrajectoryRecord& trajectory,
                           const std::filesystem::path& path);

nlohmann::json report_to_json(const PolarizationReport& report);

/// Initial-state specs understood by the CLI and the scenario config:
///   "node:<i>[:plus|minus]"  unit mass on one branch of node i
///   "pair:<i>"               1/2 on both branches of node i (zero velocity)
///   "basis:<k>"              unit vector e_k of the doubled space
///   "uniform"                x_plus = all-ones, x_minus = 0
///   "random:<seed>"          deterministic complex Gaussian entries
///   "file:<path>"            JSON {"re": [...], "im": [...]} of length 2n,
///                            or {"x_plus": {...}, "x_minus": {...}} of n
DoubledState parse_init_spec(const std::string& spec, Index n);

/// Scenario config JSON:
/// {
///   "graph": "path"            | inline graph object,
///   "init": "spec string"      (default "node:0"),
///   "threshold": 0.5, "clique_weight": 1.0,
///   "potential": {"a": -2.0, "b": 1.0},
///   "times": {"t0": 0, "t1": 10, "samples": 101},
///   "tolerances": {"zero_tol": ..., "complex_tol": ..., "cond_max": ...,
///                  "pattern_tol": ...}            (all optional),
///   "spring": {"n": 8, "stiffness": 1, "natural_length": 1.3,
///              "wall_gap": 6, "wall_stiffness": 1, "cut_after": 3} (optional),
///   "output_dir": "dir"        (optional)
/// }
struct ScenarioSpec {
  WeightedDigraph graph;
  DoubledState x_hat_0;
  ScenarioOptions options;
  std::string output_dir;
};

ScenarioSpec parse_scenario_config(const std::string& text,
                                   const std::filesystem::path& base_dir);
ScenarioSpec load_scenario_config(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace oscnet
