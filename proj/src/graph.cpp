#include "oscnet/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "oscnet/error.hpp"

namespace oscnet {

namespace {

bool edge_order(const Edge& a, const Edge& b) {
  return a.source != b.source ? a.source < b.source : a.target < b.target;
}

}  // namespace

bool WeightedDigraph::has_edge(int source, int target) const {
  return edge_weight(source, target) != 0.0;
}

double WeightedDigraph::edge_weight(int source, int target) const {
  Edge probe{source, target, 0.0};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe, edge_order);
  if (it != edges_.end() && it->source == source && it->target == target) return it->weight;
  return 0.0;
}

Matrix WeightedDigraph::adjacency() const {
  Matrix a = Matrix::Zero(n_, n_);
  for (const Edge& e : edges_) a(e.source, e.target) = e.weight;
  return a;
}

Vector WeightedDigraph::out_degrees() const {
  Vector d = Vector::Zero(n_);
  for (const Edge& e : edges_) d[e.source] += e.weight;
  return d;
}

WeightedDigraph build_graph(int n, const std::vector<Edge>& edges) {
  if (n <= 0) raise(errc::invalid_size, "node count must be positive, got " + std::to_string(n));
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.source < 0 || e.source >= n || e.target < 0 || e.target >= n)
      raise(errc::index_out_of_range, "edge (" + std::to_string(e.source) + ", " +
                                          std::to_string(e.target) + ") outside [0, " +
                                          std::to_string(n) + ")");
    if (e.source == e.target)
      raise(errc::self_loop, "self-loop at node " + std::to_string(e.source));
    if (e.weight < 0.0 || !std::isfinite(e.weight))
      raise(errc::invalid_weight, "edge (" + std::to_string(e.source) + ", " +
                                      std::to_string(e.target) + ") has invalid weight");
    if (e.weight == 0.0) continue;  // dropped, not an error
    kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end(), edge_order);
  for (std::size_t i = 1; i < kept.size(); ++i) {
    if (kept[i].source == kept[i - 1].source && kept[i].target == kept[i - 1].target)
      raise(errc::duplicate_edge, "duplicate edge (" + std::to_string(kept[i].source) + ", " +
                                      std::to_string(kept[i].target) + ")");
  }
  WeightedDigraph g;
  g.n_ = n;
  g.edges_ = std::move(kept);
  return g;
}

WeightedDigraph complete_graph(int n, double weight) {
  if (n < 2) raise(errc::invalid_size, "complete graph needs n >= 2, got " + std::to_string(n));
  if (!(weight > 0.0)) raise(errc::invalid_weight, "complete graph weight must be > 0");
  std::vector<Edge> edges;
  edges.reserve(std::size_t(n) * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) edges.push_back({i, j, weight});
  return build_graph(n, edges);
}

std::vector<std::vector<int>> weakly_connected_components(const WeightedDigraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> components;
  for (int start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    const int id = int(components.size());
    components.emplace_back();
    std::queue<int> queue;
    queue.push(start);
    label[start] = id;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      components[id].push_back(u);
      for (int v : adj[u]) {
        if (label[v] < 0) {
          label[v] = id;
          queue.push(v);
        }
      }
    }
  }
  for (auto& c : components) std::sort(c.begin(), c.end());
  return components;
}

WeightedDigraph induced_subgraph(const WeightedDigraph& g, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<int> local(g.node_count(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] < 0 || nodes[i] >= g.node_count())
      raise(errc::index_out_of_range, "subgraph node " + std::to_string(nodes[i]) + " out of range");
    local[nodes[i]] = int(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.source] >= 0 && local[e.target] >= 0)
      edges.push_back({local[e.source], local[e.target], e.weight});
  return build_graph(int(nodes.size()), edges);
}

FragmentationResult fragment(const WeightedDigraph& g, double threshold, double clique_weight) {
  // threshold 0 is the no-cut limit: edges are removed on weight < threshold
  if (threshold < 0.0) raise(errc::invalid_params, "fragment threshold must be >= 0");
  if (!(clique_weight > 0.0)) raise(errc::invalid_params, "clique weight must be > 0");

  FragmentationResult result;
  result.clique_weight = clique_weight;

  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (e.weight < threshold)
      result.cut_edges.push_back(e);
    else
      kept.push_back(e);
  }
  WeightedDigraph remainder = build_graph(g.node_count(), kept);
  result.components = weakly_connected_components(remainder);

  std::vector<Edge> completed;
  for (const auto& component : result.components)
    for (int i : component)
      for (int j : component)
        if (i != j) completed.push_back({i, j, clique_weight});
  result.completed_graph = build_graph(g.node_count(), completed);
  return result;
}

LaplacianBundle laplacian_bundle(const WeightedDigraph& g) {
  const int n = g.node_count();
  LaplacianBundle bundle;
  bundle.A = g.adjacency();
  bundle.degrees = bundle.A.rowwise().sum();
  for (int i = 0; i < n; ++i)
    if (bundle.degrees[i] == 0.0)
      raise(errc::zero_out_degree, "node " + std::to_string(i) +
                                       " has out-degree 0; semi-normalized and normalized "
                                       "Laplacians are undefined");
  bundle.D = bundle.degrees.asDiagonal();
  bundle.L = bundle.D - bundle.A;
  const Vector inv_sqrt_d = bundle.degrees.array().rsqrt();
  bundle.H = inv_sqrt_d.asDiagonal() * bundle.L;
  bundle.N = bundle.H * inv_sqrt_d.asDiagonal();
  return bundle;
}

}  // namespace oscnet
