#pragma once

// Shared helpers for the test suites: deterministic random graphs, initial
// states, and small brute-force oracles kept independent of the code paths
// they check.

#include <cstdint>
#include <random>
#include <vector>

#include "oscnet/detail/rng.hpp"
#include "oscnet/generate.hpp"
#include "oscnet/graph.hpp"
#include "oscnet/spectral.hpp"
#include "oscnet/state.hpp"

namespace oscnet::testing {

inline WeightedDigraph random_symmetric_connected(int n, std::uint64_t seed,
                                                  double edge_prob = 0.35,
                                                  double wmin = 0.3, double wmax = 1.2) {
  RandomGraphParams params;
  params.n = n;
  params.edge_prob = edge_prob;
  params.weight_min = wmin;
  params.weight_max = wmax;
  params.symmetric = true;
  params.connect = true;
  return make_random_graph(params, seed);
}

/// Asymmetric digraph with a guaranteed real nonnegative spectrum: scale the
/// out-weights of a symmetric graph per node. The Laplacian becomes
/// S * L_sym, which is similar to the symmetric S^1/2 L_sym S^1/2.
inline WeightedDigraph row_scaled_asymmetric(const WeightedDigraph& symmetric,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> scale(std::size_t(symmetric.node_count()));
  for (double& s : scale) s = detail::uniform(rng, 0.5, 2.0);
  std::vector<Edge> edges;
  for (const Edge& e : symmetric.edges())
    edges.push_back({e.source, e.target, scale[std::size_t(e.source)] * e.weight});
  return build_graph(symmetric.node_count(), edges);
}

inline ComplexVector random_complex_vector(Index n, std::mt19937_64& rng) {
  ComplexVector v(n);
  for (Index i = 0; i < n; ++i) v[i] = Complex(detail::normal(rng), detail::normal(rng));
  return v;
}

/// Adjusts x_minus so the wave-equation velocity project(-i H_hat x_hat),
/// which equals -i sqrt(D) (x_plus - x_minus), has no component on the
/// kernel mode of the decomposition. Requires a connected graph.
inline void remove_kernel_velocity(const SpectralDecomposition& dec, const Vector& degrees,
                                   const ComplexVector& x_plus, ComplexVector& x_minus) {
  const Vector phi0 = dec.P_inv.row(0);
  const Vector sqrt_d = degrees.array().sqrt();
  Complex bias{0.0, 0.0};
  double denom = 0.0;
  for (Index i = 0; i < phi0.size(); ++i) {
    bias += phi0[i] * sqrt_d[i] * (x_plus[i] - x_minus[i]);
    denom += phi0[i] * sqrt_d[i];
  }
  for (Index i = 0; i < x_minus.size(); ++i) x_minus[i] += bias / denom;
}

/// Brute-force rank of the unweighted undirected-support Laplacian.
inline Index support_laplacian_rank(const WeightedDigraph& g) {
  const int n = g.node_count();
  Matrix support = Matrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    support(e.source, e.target) = 1.0;
    support(e.target, e.source) = 1.0;
  }
  const Matrix laplacian = Matrix(support.rowwise().sum().asDiagonal()) - support;
  Eigen::FullPivLU<Matrix> lu(laplacian);
  lu.setThreshold(1e-10);
  return lu.rank();
}

/// Structural boolean product: pattern of L^2 from the pattern of L,
/// immune to numerical cancellation.
inline BoolMatrix structural_square(const BoolMatrix& p) {
  const Index n = p.rows();
  BoolMatrix out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      bool hit = false;
      for (Index k = 0; k < n && !hit; ++k) hit = p(i, k) && p(k, j);
      out(i, j) = hit;
    }
  return out;
}

inline BoolMatrix laplacian_pattern_with_diag(const Matrix& L) {
  BoolMatrix p(L.rows(), L.cols());
  for (Index i = 0; i < L.rows(); ++i)
    for (Index j = 0; j < L.cols(); ++j) p(i, j) = (i == j) || L(i, j) != 0.0;
  return p;
}

inline Matrix naive_matrix_power(const Matrix& m, int k) {
  Matrix result = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) result = result * m;
  return result;
}

}  // namespace oscnet::testing
