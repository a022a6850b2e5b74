#include "oscnet/polarization.hpp"

#include <Eigen/QR>

#include <cmath>
#include <string>

#include "oscnet/error.hpp"
#include "oscnet/hamiltonian.hpp"

namespace oscnet {

bool bosonic_existence(const WeightedDigraph& g, double pattern_tol) {
  if (weakly_connected_components(g).size() != 1)
    raise(errc::invalid_params, "bosonic_existence expects a connected graph");
  const LaplacianBundle bundle = laplacian_bundle(g);
  const SpectralDecomposition dec = decompose(bundle.L);
  return !sqrt_laplacian(dec, pattern_tol).pattern_dense;
}

Matrix ng_mode_extract(const SpectralDecomposition& dec, double zero_tol) {
  const double tol = zero_tol >= 0.0 ? zero_tol : dec.zero_tol;
  std::vector<Index> kernel_cols;
  for (Index i = 0; i < dec.size(); ++i)
    if (std::abs(dec.lambda[i]) <= tol) kernel_cols.push_back(i);
  Matrix modes(dec.size(), Index(kernel_cols.size()));
  for (Index k = 0; k < modes.cols(); ++k) {
    modes.col(k) = dec.P.col(kernel_cols[std::size_t(k)]);
    modes.col(k).normalize();
  }
  return modes;
}

double kernel_alignment(const Matrix& kernel, const std::vector<int>& component, Index n) {
  if (kernel.cols() == 0) return 0.0;
  if (kernel.rows() != n) raise(errc::dimension_mismatch, "kernel rows must equal n");
  Vector indicator = Vector::Zero(n);
  for (int node : component) {
    if (node < 0 || node >= n)
      raise(errc::index_out_of_range, "component node " + std::to_string(node) + " out of range");
    indicator[node] = 1.0;
  }
  indicator.normalize();
  // Orthonormalize the kernel columns, then measure the projection norm;
  // this is invariant under rotations of the kernel basis.
  Eigen::HouseholderQR<Matrix> qr(kernel);
  Matrix q = qr.householderQ() * Matrix::Identity(n, kernel.cols());
  return (q.transpose() * indicator).norm();
}

namespace {

DoubledState restrict_state(const DoubledState& x_hat, const std::vector<int>& nodes) {
  DoubledState sub(2 * Index(nodes.size()));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    sub[2 * Index(k)] = x_hat[2 * nodes[k]];
    sub[2 * Index(k) + 1] = x_hat[2 * nodes[k] + 1];
  }
  return sub;
}

std::vector<double> frequencies_of(const SpectralDecomposition& dec) {
  return {dec.omega.data(), dec.omega.data() + dec.omega.size()};
}

}  // namespace

ScenarioResult run_polarization_scenario(const WeightedDigraph& g, const DoubledState& x_hat_0,
                                         const ScenarioOptions& opts) {
  if (weakly_connected_components(g).size() != 1)
    raise(errc::invalid_params, "pre-split graph must be connected");
  if (x_hat_0.size() != 2 * g.node_count())
    raise(errc::dimension_mismatch, "initial doubled state must have length 2n");

  ScenarioResult result;
  PolarizationReport& report = result.report;
  report.pre_graph = g;
  report.phase = opts.potential.a < 0.0 ? "broken" : "symmetric";

  // Pre-split: the doubled closed form always applies.
  const LaplacianBundle pre_bundle = laplacian_bundle(g);
  const SpectralDecomposition pre_dec = decompose(pre_bundle.L, opts.spectral);
  const Hamiltonian pre_ham = build_hamiltonian(pre_bundle);
  result.pre_trajectory = solve_fermionic(pre_ham, pre_dec, x_hat_0, opts.grid);
  report.zero_modes_pre = int(pre_dec.zero_mode_count());
  report.sqrt_pattern_pre = !sqrt_laplacian(pre_dec, opts.pattern_tol).pattern_dense;
  report.frequencies_pre = frequencies_of(pre_dec);

  // Split and complete.
  const FragmentationResult frag = fragment(g, opts.threshold, opts.clique_weight);
  report.post_graph = frag.completed_graph;
  report.components = frag.components;

  // Kernel dimension of the disjoint-union Laplacian (H is not needed here,
  // so singleton components are fine).
  const Matrix post_L = Matrix(report.post_graph.out_degrees().asDiagonal()) -
                        report.post_graph.adjacency();
  report.zero_modes_post = int(decompose(post_L, opts.spectral).zero_mode_count());

  for (const auto& component : frag.components) {
    ComponentReport comp;
    comp.nodes = component;
    if (component.size() < 2) {
      comp.skipped = true;
      report.component_reports.push_back(std::move(comp));
      continue;
    }
    const WeightedDigraph sub = induced_subgraph(report.post_graph, component);
    const LaplacianBundle sub_bundle = laplacian_bundle(sub);
    const SpectralDecomposition sub_dec = decompose(sub_bundle.L, opts.spectral);
    const Hamiltonian sub_ham = build_hamiltonian(sub_bundle);
    result.post_trajectories.push_back(
        solve_fermionic(sub_ham, sub_dec, restrict_state(x_hat_0, component), opts.grid));

    comp.bosonic_exists = !sqrt_laplacian(sub_dec, opts.pattern_tol).pattern_dense;
    comp.frequencies = frequencies_of(sub_dec);
    comp.ng_modes = ng_mode_extract(sub_dec);
    std::vector<int> all(component.size());
    for (std::size_t i = 0; i < component.size(); ++i) all[i] = int(i);
    comp.ng_alignment = kernel_alignment(comp.ng_modes, all, Index(component.size()));
    report.component_reports.push_back(std::move(comp));
  }

  if (opts.spring) {
    const SpringEquilibrium eq = spring_equilibrium(*opts.spring, opts.spring_cut);
    if (opts.spring_cut)
      report.equilibrium_shift = {eq.left_mean_shift, eq.right_mean_shift};
  }
  return result;
}

}  // namespace oscnet
