#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscnet/dynamics.hpp"
#include "oscnet/graph.hpp"
#include "oscnet/potential.hpp"
#include "oscnet/spectral.hpp"
#include "oscnet/spring.hpp"

namespace oscnet {

/// True iff sqrt(L) introduces no links absent from L, i.e. the branch
/// solutions are expressible without interactions between unlinked nodes.
/// Holds for complete graphs, fails for sparse ones. Requires a weakly
/// connected graph with positive out-degrees.
bool bosonic_existence(const WeightedDigraph& g, double pattern_tol = -1.0);

/// Columns of P whose eigenvalue is (snapped to) zero: one per weakly
/// connected component. zero_tol < 0 reuses the decomposition's own.
Matrix ng_mode_extract(const SpectralDecomposition& dec, double zero_tol = -1.0);

/// Norm of the projection of the normalized component indicator vector onto
/// the span of the kernel columns; 1 means the indicator lies in the kernel.
/// Rotation-invariant, unlike comparing against individual kernel vectors.
double kernel_alignment(const Matrix& kernel, const std::vector<int>& component,
                        Index n);

struct ScenarioOptions {
  double threshold = 0.5;
  double clique_weight = 1.0;
  PotentialParams potential;  // labels the phase; a < 0 marks the broken one
  TimeGrid grid;
  DecomposeOptions spectral;
  double pattern_tol = -1.0;
  std::optional<SpringChain> spring;  // optional 1-d equilibrium-shift demo
  std::optional<int> spring_cut;
};

struct ComponentReport {
  std::vector<int> nodes;
  bool skipped = false;  // singleton: no dynamics, no spectral data
  bool bosonic_exists = false;
  std::vector<double> frequencies;
  Matrix ng_modes;            // kernel columns in component-local indexing
  double ng_alignment = 0.0;  // uniform-vector projection onto the kernel
};

struct PolarizationReport {
  WeightedDigraph pre_graph;
  WeightedDigraph post_graph;
  std::vector<std::vector<int>> components;
  int zero_modes_pre = 0;
  int zero_modes_post = 0;
  bool sqrt_pattern_pre = false;       // pattern_matches(sqrt(L), L) before the split
  std::vector<double> frequencies_pre;
  std::vector<ComponentReport> component_reports;
  std::vector<double> equilibrium_shift;  // {left, right} when the spring demo ran
  std::string phase;                      // "symmetric" or "broken"
};

struct ScenarioResult {
  PolarizationReport report;
  TrajectoryRecord pre_trajectory;
  std::vector<TrajectoryRecord> post_trajectories;  // one per non-singleton component
};

/// The full pipeline: solve the connected pre-split graph, fragment it,
/// complete each component, re-solve per component, and collect zero-mode
/// and sqrt-pattern diagnostics across the split.
ScenarioResult run_polarization_scenario(const WeightedDigraph& g,
                                         const DoubledState& x_hat_0,
                                         const ScenarioOptions& opts);

}  // namespace oscnet
