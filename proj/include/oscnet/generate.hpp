#pragma once

#include <cstdint>
#include <vector>

#include "oscnet/graph.hpp"

namespace oscnet {

/// Deterministic graph generators for the CLI and tests. Every edge is
/// mirrored (i->j and j->i with equal weight) so the resulting Laplacians
/// are symmetric.
WeightedDigraph make_path_graph(int n, double weight = 1.0);
WeightedDigraph make_cycle_graph(int n, double weight = 1.0);
WeightedDigraph make_star_graph(int n, double weight = 1.0);

struct TwoClusterParams {
  int size_a = 6;
  int size_b = 6;
  double intra_weight = 1.0;
  double bridge_weight = 0.1;
  int bridges = 2;
  double chord_prob = 0.3;  // extra intra-cluster chords on top of a ring
};

/// Two internally connected clusters (ring + random chords) joined by a few
/// weak bridge edges. Fully determined by the seed.
WeightedDigraph make_two_cluster_graph(const TwoClusterParams& params,
                                       std::uint64_t seed);

struct RandomGraphParams {
  int n = 10;
  double edge_prob = 0.3;
  double weight_min = 0.5;
  double weight_max = 1.5;
  bool symmetric = true;
  bool connect = false;  // union a random spanning tree to force connectivity
};

WeightedDigraph make_random_graph(const RandomGraphParams& params,
                                  std::uint64_t seed);

}  // namespace oscnet
