#include "oscnet/generate.hpp"

#include <random>

#include "oscnet/detail/rng.hpp"
#include "oscnet/error.hpp"

namespace oscnet {

namespace {

void add_mutual(std::vector<Edge>& edges, int i, int j, double w) {
  edges.push_back({i, j, w});
  edges.push_back({j, i, w});
}

}  // namespace

WeightedDigraph make_path_graph(int n, double weight) {
  if (n < 2) raise(errc::invalid_params, "path graph needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) add_mutual(edges, i, i + 1, weight);
  return build_graph(n, edges);
}

WeightedDigraph make_cycle_graph(int n, double weight) {
  if (n < 3) raise(errc::invalid_params, "cycle graph needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) add_mutual(edges, i, (i + 1) % n, weight);
  return build_graph(n, edges);
}

WeightedDigraph make_star_graph(int n, double weight) {
  if (n < 2) raise(errc::invalid_params, "star graph needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) add_mutual(edges, 0, i, weight);
  return build_graph(n, edges);
}

WeightedDigraph make_two_cluster_graph(const TwoClusterParams& p, std::uint64_t seed) {
  if (p.size_a < 3 || p.size_b < 3)
    raise(errc::invalid_params, "two-cluster graph needs cluster sizes >= 3");
  if (p.bridges < 1 || p.bridges > p.size_a * p.size_b)
    raise(errc::invalid_params, "bridge count must lie in [1, size_a * size_b]");
  if (!(p.intra_weight > 0.0) || !(p.bridge_weight > 0.0))
    raise(errc::invalid_params, "two-cluster weights must be > 0");

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  auto build_cluster = [&](int offset, int size) {
    for (int i = 0; i < size; ++i)  // connected ring backbone
      add_mutual(edges, offset + i, offset + (i + 1) % size, p.intra_weight);
    for (int i = 0; i < size; ++i)  // random chords
      for (int j = i + 2; j < size; ++j) {
        if (i == 0 && j == size - 1) continue;  // ring edge already present
        if (detail::uniform01(rng) < p.chord_prob)
          add_mutual(edges, offset + i, offset + j, p.intra_weight);
      }
  };
  build_cluster(0, p.size_a);
  build_cluster(p.size_a, p.size_b);
  for (int k = 0; k < p.bridges; ++k) {
    int a = int(detail::uniform_index(rng, std::uint64_t(p.size_a)));
    int b = p.size_a + int(detail::uniform_index(rng, std::uint64_t(p.size_b)));
    while (true) {  // distinct bridge endpoints on the left cluster
      bool clash = false;
      for (const Edge& e : edges)
        if (e.source == a && e.target == b) clash = true;
      if (!clash) break;
      a = int(detail::uniform_index(rng, std::uint64_t(p.size_a)));
      b = p.size_a + int(detail::uniform_index(rng, std::uint64_t(p.size_b)));
    }
    add_mutual(edges, a, b, p.bridge_weight);
  }
  return build_graph(p.size_a + p.size_b, edges);
}

WeightedDigraph make_random_graph(const RandomGraphParams& p, std::uint64_t seed) {
  if (p.n < 2) raise(errc::invalid_params, "random graph needs n >= 2");
  if (p.edge_prob < 0.0 || p.edge_prob > 1.0)
    raise(errc::invalid_params, "edge probability must lie in [0, 1]");
  if (!(p.weight_min > 0.0) || p.weight_max < p.weight_min)
    raise(errc::invalid_params, "need 0 < weight_min <= weight_max");

  std::mt19937_64 rng(seed);
  auto draw_weight = [&] { return detail::uniform(rng, p.weight_min, p.weight_max); };

  std::vector<Edge> edges;
  if (p.symmetric) {
    for (int i = 0; i < p.n; ++i)
      for (int j = i + 1; j < p.n; ++j)
        if (detail::uniform01(rng) < p.edge_prob) add_mutual(edges, i, j, draw_weight());
  } else {
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (i != j && detail::uniform01(rng) < p.edge_prob)
          edges.push_back({i, j, draw_weight()});
  }

  if (p.connect) {
    // random spanning tree over a shuffled node order
    std::vector<int> order(std::size_t(p.n));
    for (int i = 0; i < p.n; ++i) order[std::size_t(i)] = i;
    for (int i = p.n - 1; i > 0; --i)
      std::swap(order[std::size_t(i)],
                order[detail::uniform_index(rng, std::uint64_t(i) + 1)]);
    for (int i = 1; i < p.n; ++i) {
      int parent = order[detail::uniform_index(rng, std::uint64_t(i))];
      int child = order[std::size_t(i)];
      bool present = false;
      for (const Edge& e : edges)
        if (e.source == parent && e.target == child) present = true;
      if (!present) {
        double w = draw_weight();
        if (p.symmetric)
          add_mutual(edges, parent, child, w);
        else
          edges.push_back({parent, child, w});
      }
    }
  }
  return build_graph(p.n, edges);
}

}  // namespace oscnet
