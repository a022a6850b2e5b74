#pragma once

#include <vector>

#include "oscnet/types.hpp"

namespace oscnet {

struct Edge {
  int source = 0;
  int target = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted directed graph. Immutable after construction; no self-loops,
/// no duplicate (source, target) pairs, all stored weights strictly positive
/// (zero-weight input edges are dropped). Edges are kept sorted by
/// (source, target) so serialization and hashing are canonical.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  int node_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int source, int target) const;
  double edge_weight(int source, int target) const;  // 0 when absent

  Matrix adjacency() const;
  Vector out_degrees() const;

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;
  friend WeightedDigraph build_graph(int n, const std::vector<Edge>& edges);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Validates and canonicalizes an edge list. Zero-weight edges are dropped;
/// self-loops, out-of-range endpoints, negative weights and duplicate
/// (source, target) pairs are rejected.
WeightedDigraph build_graph(int n, const std::vector<Edge>& edges);

/// All n(n-1) ordered pairs with a uniform weight.
WeightedDigraph complete_graph(int n, double weight);

/// Partition of the node set ignoring edge direction. Each component is
/// sorted ascending; components are ordered by their smallest node.
std::vector<std::vector<int>> weakly_connected_components(const WeightedDigraph& g);

/// Subgraph on the given nodes (sorted, deduplicated), reindexed to
/// 0..k-1 in sorted order.
WeightedDigraph induced_subgraph(const WeightedDigraph& g, std::vector<int> nodes);

struct FragmentationResult {
  std::vector<std::vector<int>> components;
  std::vector<Edge> cut_edges;
  WeightedDigraph completed_graph;
  double clique_weight = 1.0;
};

/// Removes every edge with weight < threshold (threshold 0 cuts nothing),
/// finds the weakly connected components of the remainder, and replaces each
/// component's internal edge set with a uniform-weight complete digraph.
/// Singleton components stay isolated nodes.
FragmentationResult fragment(const WeightedDigraph& g, double threshold,
                             double clique_weight = 1.0);

struct LaplacianBundle {
  Matrix A;        // weighted adjacency
  Matrix D;        // diagonal out-degree matrix
  Matrix L;        // D - A
  Matrix H;        // sqrt(D^-1) * L, the semi-normalized Laplacian
  Matrix N;        // sqrt(D^-1) * L * sqrt(D^-1), the normalized Laplacian
  Vector degrees;  // diagonal of D

  Vector sqrt_degrees() const { return degrees.array().sqrt(); }
};

/// All five matrices for a graph. Requires every node to have out-degree
/// > 0 (otherwise sqrt(D^-1) does not exist); throws zero_out_degree naming
/// the offending node.
LaplacianBundle laplacian_bundle(const WeightedDigraph& g);

}  // namespace oscnet
