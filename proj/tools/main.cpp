// Command-line front end: graph generation, spectral analysis, simulation,
// polarization scenarios, and matrix export.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "oscnet/dynamics.hpp"
#include "oscnet/error.hpp"
#include "oscnet/generate.hpp"
#include "oscnet/generators.hpp"
#include "oscnet/graph.hpp"
#include "oscnet/hamiltonian.hpp"
#include "oscnet/io.hpp"
#include "oscnet/polarization.hpp"
#include "oscnet/spring.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;
using namespace oscnet;

struct ToleranceFlags {
  double zero_tol = -1.0;
  double complex_tol = -1.0;
  double cond_max = 1e12;
  double reconstruct_tol = -1.0;
  double pattern_tol = -1.0;

  DecomposeOptions spectral() const {
    DecomposeOptions opts;
    opts.zero_tol = zero_tol;
    opts.complex_tol = complex_tol;
    opts.cond_max = cond_max;
    opts.reconstruct_tol = reconstruct_tol;
    return opts;
  }
};

void add_tolerance_flags(CLI::App* cmd, ToleranceFlags& flags) {
  cmd->add_option("--zero-tol", flags.zero_tol, "eigenvalue zero threshold (default 1e-9*||L||)");
  cmd->add_option("--complex-tol", flags.complex_tol,
                  "max tolerated eigenvalue imaginary part (default 1e-9*||L||)");
  cmd->add_option("--cond-max", flags.cond_max, "eigenvector condition-number bound");
  cmd->add_option("--reconstruct-tol", flags.reconstruct_tol,
                  "diagonalization reconstruction bound (default 1e-8*||L||*n)");
  cmd->add_option("--pattern-tol", flags.pattern_tol,
                  "structural-zero magnitude threshold (default 1e-9*||M||)");
}

fs::path resolve_output(const std::string& output_dir, const std::string& name) {
  fs::path p(name);
  if (p.is_absolute()) return p;
  fs::path dir = output_dir.empty() ? fs::path(".") : fs::path(output_dir);
  fs::create_directories(dir);
  return dir / p;
}

json eigen_list(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------
struct GenArgs {
  std::string kind;
  int n = 5;
  double weight = 1.0;
  std::vector<int> sizes{6, 6};
  double intra = 1.0;
  double bridge = 0.1;
  int bridges = 2;
  double chord_prob = 0.3;
  double p = 0.3;
  double wmin = 0.5;
  double wmax = 1.5;
  std::uint64_t seed = 1;
  bool directed = false;
  bool connect = false;
  std::string output = "graph.json";
};

int run_gen(const GenArgs& args, const std::string& output_dir) {
  WeightedDigraph g;
  if (args.kind == "path") {
    g = make_path_graph(args.n, args.weight);
  } else if (args.kind == "cycle") {
    g = make_cycle_graph(args.n, args.weight);
  } else if (args.kind == "complete") {
    g = complete_graph(args.n, args.weight);
  } else if (args.kind == "star") {
    g = make_star_graph(args.n, args.weight);
  } else if (args.kind == "two-cluster") {
    if (args.sizes.size() != 2)
      raise(errc::invalid_params, "--sizes expects two comma-separated cluster sizes");
    TwoClusterParams params;
    params.size_a = args.sizes[0];
    params.size_b = args.sizes[1];
    params.intra_weight = args.intra;
    params.bridge_weight = args.bridge;
    params.bridges = args.bridges;
    params.chord_prob = args.chord_prob;
    g = make_two_cluster_graph(params, args.seed);
  } else if (args.kind == "random") {
    RandomGraphParams params;
    params.n = args.n;
    params.edge_prob = args.p;
    params.weight_min = args.wmin;
    params.weight_max = args.wmax;
    params.symmetric = !args.directed;
    params.connect = args.connect;
    g = make_random_graph(params, args.seed);
  } else {
    raise(errc::invalid_params, "unknown graph kind '" + args.kind + "'");
  }
  const fs::path path = resolve_output(output_dir, args.output);
  save_graph(g, path);
  std::cout << "wrote " << path.string() << " (n=" << g.node_count()
            << ", edges=" << g.edges().size() << ", hash=" << graph_hash(g) << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------
int run_analyze(const std::string& graph_file, const std::string& output,
                const ToleranceFlags& tols, const std::string& output_dir) {
  const WeightedDigraph g = load_graph(graph_file);
  const LaplacianBundle bundle = laplacian_bundle(g);
  const SpectralDecomposition dec = decompose(bundle.L, tols.spectral());
  const SqrtLaplacian root = sqrt_laplacian(dec, tols.pattern_tol);
  const Hamiltonian ham = build_hamiltonian(bundle);

  const double block_tol = 1e-12 * std::max(max_abs(ham.H_hat), 1.0);
  const BoolMatrix numeric_blocks = block_nonzero_pattern(ham.H_hat, block_tol);
  bool hamiltonian_pattern_matches = true;
  for (Index i = 0; i < numeric_blocks.rows(); ++i)
    for (Index j = 0; j < numeric_blocks.cols(); ++j) {
      const bool expected = (i == j) || bundle.L(i, j) != 0.0;
      if (numeric_blocks(i, j) != expected) hamiltonian_pattern_matches = false;
    }

  const auto& gen = GeneratorAlgebra::canonical();
  const bool algebra_ok = anticommutator(gen.a_hat, gen.b_hat) == gen.e_hat &&
                          (gen.a_hat * gen.a_hat) == Matrix2::Zero() &&
                          (gen.b_hat * gen.b_hat) == Matrix2::Zero();

  json doc{{"n", g.node_count()},
           {"edges", g.edges().size()},
           {"graph_hash", graph_hash(g)},
           {"symmetric", dec.symmetric},
           {"eigenvalues", eigen_list(dec.lambda)},
           {"frequencies", eigen_list(dec.omega)},
           {"zero_modes", dec.zero_mode_count()},
           {"components", weakly_connected_components(g).size()},
           {"cond_P", dec.cond_P},
           {"sqrt_pattern_matches", !root.pattern_dense},
           {"hamiltonian_pattern_matches", hamiltonian_pattern_matches},
           {"anticommutation_exact", algebra_ok}};
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!output.empty()) write_text_file(resolve_output(output_dir, output), text);
  return 0;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------
struct SimulateArgs {
  std::string graph_file;
  std::string solver = "fermionic";
  std::string init = "node:0";
  double t0 = 0.0;
  double t1 = 10.0;
  Index samples = 101;
  double dt_internal = -1.0;  // auto
  bool force = false;
  std::string output = "trajectory.csv";
  std::string json_output;
};

int run_simulate(const SimulateArgs& args, const ToleranceFlags& tols,
                 const std::string& output_dir) {
  const WeightedDigraph g = load_graph(args.graph_file);
  const DoubledState x0 = parse_init_spec(args.init, g.node_count());
  const TimeGrid grid{args.t0, args.t1, args.samples};

  TrajectoryRecord record;
  json summary{{"solver", args.solver}, {"graph_hash", graph_hash(g)},
               {"samples", grid.samples}, {"dt", grid.dt()}};

  if (args.solver == "fermionic") {
    const LaplacianBundle bundle = laplacian_bundle(g);
    const SpectralDecomposition dec = decompose(bundle.L, tols.spectral());
    record = solve_fermionic(build_hamiltonian(bundle), dec, x0, grid);
    summary["wave_residual"] = wave_equation_residual(bundle.L, record);
  } else if (args.solver == "bosonic") {
    bool admissible = bosonic_existence(g, tols.pattern_tol);
    if (!admissible && !args.force)
      raise(errc::solver_inapplicable,
            "sqrt(L) introduces links absent from L; the branch solution is "
            "inadmissible here (rerun with --force to override)");
    const LaplacianBundle bundle = laplacian_bundle(g);
    const SpectralDecomposition dec = decompose(bundle.L, tols.spectral());
    record = solve_bosonic(dec, plus_branch(x0), minus_branch(x0), grid);
    summary["bosonic_admissible"] = admissible;
    summary["residual_plus"] = fundamental_residual(dec, record, Branch::plus);
    summary["residual_minus"] = fundamental_residual(dec, record, Branch::minus);
  } else if (args.solver == "oracle") {
    const LaplacianBundle bundle = laplacian_bundle(g);
    const Hamiltonian ham = build_hamiltonian(bundle);
    const auto [wave_x0, wave_v0] = wave_initial_conditions(ham, x0);
    double step = args.dt_internal;
    if (step <= 0.0) {
      const double omega_max = std::sqrt(std::max(spectral_radius_estimate(bundle.L), 0.0));
      step = omega_max > 0.0 ? 0.01 / omega_max : grid.dt() > 0.0 ? grid.dt() : 0.01;
    }
    record = integrate_wave(bundle.L, wave_x0, wave_v0, grid, step);
    summary["dt_internal"] = step;
    if (max_abs(bundle.L - bundle.L.transpose()) <= 1e-12 * std::max(max_abs(bundle.L), 1.0)) {
      const Index n = g.node_count();
      const double e0 = total_energy(bundle.L, record.states.front().head(n),
                                     record.states.front().tail(n));
      double drift = 0.0;
      for (const auto& s : record.states)
        drift = std::max(drift,
                         std::abs(total_energy(bundle.L, s.head(n), s.tail(n)) - e0));
      summary["energy_initial"] = e0;
      summary["energy_drift"] = drift;
    }
  } else {
    raise(errc::invalid_params, "unknown solver '" + args.solver + "'");
  }

  record.meta.graph_hash = graph_hash(g);
  const fs::path csv_path = resolve_output(output_dir, args.output);
  write_trajectory_csv(record, csv_path);
  summary["output"] = csv_path.string();
  if (!args.json_output.empty())
    write_trajectory_json(record, resolve_output(output_dir, args.json_output));
  std::cout << summary.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// polarize
// ---------------------------------------------------------------------------
int run_polarize(const std::string& config_file, std::string output_dir) {
  const ScenarioSpec spec = load_scenario_config(config_file);
  if (output_dir.empty()) output_dir = spec.output_dir;
  const ScenarioResult result =
      run_polarization_scenario(spec.graph, spec.x_hat_0, spec.options);

  json report = report_to_json(result.report);
  report["graph_hash"] = {{"pre", graph_hash(result.report.pre_graph)},
                          {"post", graph_hash(result.report.post_graph)}};
  write_text_file(resolve_output(output_dir, "report.json"), report.dump(2) + "\n");
  write_trajectory_csv(result.pre_trajectory,
                       resolve_output(output_dir, "pre_trajectory.csv"));
  for (std::size_t k = 0; k < result.post_trajectories.size(); ++k)
    write_trajectory_csv(result.post_trajectories[k],
                         resolve_output(output_dir,
                                        "post_component_" + std::to_string(k) + ".csv"));

  json summary{{"components", result.report.components.size()},
               {"zero_modes_pre", result.report.zero_modes_pre},
               {"zero_modes_post", result.report.zero_modes_post},
               {"sqrt_pattern_pre", result.report.sqrt_pattern_pre},
               {"phase", result.report.phase}};
  json per_component = json::array();
  for (const auto& comp : result.report.component_reports)
    per_component.push_back(comp.skipped ? json("skipped") : json(comp.bosonic_exists));
  summary["bosonic_exists"] = std::move(per_component);
  std::cout << summary.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// export
// ---------------------------------------------------------------------------
int run_export(const std::string& graph_file, const std::string& matrix,
               const std::string& output, const ToleranceFlags& tols,
               const std::string& output_dir) {
  const WeightedDigraph g = load_graph(graph_file);
  const fs::path path = resolve_output(output_dir, output);

  if (matrix == "block-pattern") {
    const Hamiltonian ham = build_hamiltonian(laplacian_bundle(g));
    write_pattern_pbm(ham.block_pattern, path);
  } else if (matrix == "A") {
    write_matrix_csv(g.adjacency(), path);
  } else {
    const LaplacianBundle bundle = laplacian_bundle(g);
    if (matrix == "D") {
      write_matrix_csv(bundle.D, path);
    } else if (matrix == "L") {
      write_matrix_csv(bundle.L, path);
    } else if (matrix == "H") {
      write_matrix_csv(bundle.H, path);
    } else if (matrix == "N") {
      write_matrix_csv(bundle.N, path);
    } else if (matrix == "sqrtL") {
      write_matrix_csv(sqrt_laplacian(decompose(bundle.L, tols.spectral()), tols.pattern_tol).S,
                       path);
    } else if (matrix == "hamiltonian") {
      write_matrix_csv(build_hamiltonian(bundle).H_hat, path);
    } else {
      raise(errc::invalid_params, "unknown matrix '" + matrix + "'");
    }
  }
  std::cout << "wrote " << path.string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// spring
// ---------------------------------------------------------------------------
struct SpringArgs {
  int masses = 8;
  double stiffness = 1.0;
  double natural_length = 1.0;
  double wall_gap = 8.0;
  double wall_stiffness = -1.0;  // default: same as stiffness
  int cut = -1;
  std::string output;
};

int run_spring(const SpringArgs& args, const std::string& output_dir) {
  SpringChain chain =
      SpringChain::uniform(args.masses, args.stiffness, args.natural_length, args.wall_gap);
  if (args.wall_stiffness > 0.0) chain.wall_stiffness = args.wall_stiffness;
  std::optional<int> cut;
  if (args.cut >= 0) cut = args.cut;
  const SpringEquilibrium eq = spring_equilibrium(chain, cut);

  json doc{{"uncut", eigen_list(eq.uncut)}};
  if (cut) {
    doc["cut"] = eigen_list(eq.cut);
    doc["cut_after"] = eq.cut_after;
    doc["left_mean_shift"] = eq.left_mean_shift;
    doc["right_mean_shift"] = eq.right_mean_shift;
  }
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!args.output.empty()) write_text_file(resolve_output(output_dir, args.output), text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oscnet: spectral graph dynamics for oscillation models on networks"};
  app.require_subcommand(1);

  std::string output_dir;
  app.add_option("--output-dir", output_dir, "directory for output files")
      ->envname("OSCNET_OUTPUT_DIR");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph file");
  gen->add_option("kind", gen_args.kind, "path|cycle|complete|star|two-cluster|random")
      ->required();
  gen->add_option("--n", gen_args.n, "node count");
  gen->add_option("--weight", gen_args.weight, "edge weight");
  gen->add_option("--sizes", gen_args.sizes, "two-cluster sizes, e.g. 6,6")->delimiter(',');
  gen->add_option("--intra", gen_args.intra, "intra-cluster weight");
  gen->add_option("--bridge", gen_args.bridge, "bridge weight");
  gen->add_option("--bridges", gen_args.bridges, "bridge count");
  gen->add_option("--chord-prob", gen_args.chord_prob, "intra-cluster chord probability");
  gen->add_option("--p", gen_args.p, "random-graph edge probability");
  gen->add_option("--wmin", gen_args.wmin, "random-graph minimum weight");
  gen->add_option("--wmax", gen_args.wmax, "random-graph maximum weight");
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_flag("--directed", gen_args.directed, "independent directed edges");
  gen->add_flag("--connect", gen_args.connect, "force weak connectivity");
  gen->add_option("--output,-o", gen_args.output, "output file (.json or edge list)");

  std::string analyze_graph, analyze_output;
  ToleranceFlags analyze_tols;
  CLI::App* analyze = app.add_subcommand("analyze", "spectral and structural diagnostics");
  analyze->add_option("graph", analyze_graph, "graph file")->required();
  analyze->add_option("--output,-o", analyze_output, "also write the JSON here");
  add_tolerance_flags(analyze, analyze_tols);

  SimulateArgs sim_args;
  ToleranceFlags sim_tols;
  CLI::App* simulate = app.add_subcommand("simulate", "propagate an initial state");
  simulate->add_option("graph", sim_args.graph_file, "graph file")->required();
  simulate->add_option("--solver", sim_args.solver, "fermionic|bosonic|oracle");
  simulate->add_option("--init", sim_args.init, "initial state spec (see README)");
  simulate->add_option("--t0", sim_args.t0, "start time");
  simulate->add_option("--t1", sim_args.t1, "end time");
  simulate->add_option("--samples", sim_args.samples, "sample count");
  simulate->add_option("--dt-internal", sim_args.dt_internal, "oracle integrator step");
  simulate->add_flag("--force", sim_args.force, "run the bosonic solver even when inadmissible");
  simulate->add_option("--output,-o", sim_args.output, "trajectory CSV path");
  simulate->add_option("--json", sim_args.json_output, "also write the full JSON record");
  add_tolerance_flags(simulate, sim_tols);

  std::string polarize_config, polarize_outdir;
  CLI::App* polarize = app.add_subcommand("polarize", "run a polarization scenario");
  polarize->add_option("--config", polarize_config, "scenario config JSON")->required();

  std::string export_graph, export_matrix = "L", export_output = "matrix.csv";
  ToleranceFlags export_tols;
  CLI::App* exportcmd = app.add_subcommand("export", "dump a matrix as CSV or PBM");
  exportcmd->add_option("graph", export_graph, "graph file")->required();
  exportcmd->add_option("--matrix", export_matrix, "A|D|L|H|N|sqrtL|hamiltonian|block-pattern");
  exportcmd->add_option("--output,-o", export_output, "output path");
  add_tolerance_flags(exportcmd, export_tols);

  SpringArgs spring_args;
  CLI::App* spring = app.add_subcommand("spring", "spring-chain equilibrium demo");
  spring->add_option("--masses", spring_args.masses, "mass count");
  spring->add_option("--stiffness", spring_args.stiffness, "internal spring stiffness");
  spring->add_option("--natural-length", spring_args.natural_length, "rest length per spring");
  spring->add_option("--wall-gap", spring_args.wall_gap, "distance between the walls");
  spring->add_option("--wall-stiffness", spring_args.wall_stiffness, "anchor stiffness");
  spring->add_option("--cut", spring_args.cut, "internal spring to remove");
  spring->add_option("--output,-o", spring_args.output, "also write the JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args, output_dir);
    if (analyze->parsed())
      return run_analyze(analyze_graph, analyze_output, analyze_tols, output_dir);
    if (simulate->parsed()) return run_simulate(sim_args, sim_tols, output_dir);
    if (polarize->parsed()) return run_polarize(polarize_config, output_dir);
    if (exportcmd->parsed())
      return run_export(export_graph, export_matrix, export_output, export_tols, output_dir);
    if (spring->parsed()) return run_spring(spring_args, output_dir);
  } catch (const Error& e) {
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
