#include "grasp/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace grasp {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InputError("node count must be nonnegative");
  for (auto& e : edges) {
    if (e.first == e.second)
      throw InputError("self-loop at node " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n)
      throw InputError("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InputError("duplicate edge");
  edges_ = std::move(edges);
  adj_.resize(n_);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  node_weight_.assign(n_, 1.0);
}

bool Graph::has_edge(int u, int v) const {
  Edge e = make_edge(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

double Graph::edge_weight(int u, int v) const {
  auto it = edge_weight_.find(make_edge(u, v));
  return it == edge_weight_.end() ? 1.0 : it->second;
}

double Graph::node_weight(int v) const { return node_weight_[v]; }

void Graph::set_edge_weight(int u, int v, double w) {
  if (w <= 0.0) throw InputError("edge weight must be positive");
  if (!has_edge(u, v)) throw InputError("no such edge");
  edge_weight_[make_edge(u, v)] = w;
}

void Graph::set_node_weight(int v, double w) {
  if (w <= 0.0) throw InputError("node weight must be positive");
  node_weight_.at(v) = w;
}

DistanceField bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.num_nodes())
    throw InputError("bfs source out of range");
  DistanceField f;
  f.source = source;
  f.dist.assign(g.num_nodes(), kUnreachable);
  f.dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (f.dist[w] == kUnreachable) {
        f.dist[w] = f.dist[v] + 1;
        q.push(w);
      }
    }
  }
  return f;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.num_nodes(), false);
  for (int s = 0; s < g.num_nodes(); ++s) {
    if (seen[s]) continue;
    std::vector<int> block;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      block.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    comps.push_back(std::move(block));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.num_nodes() <= 1) return true;
  auto f = bfs_distances(g, 0);
  return std::find(f.dist.begin(), f.dist.end(), kUnreachable) == f.dist.end();
}

Graph apply_edits(const Graph& g, const std::vector<Edge>& additions,
                  const std::vector<Edge>& removals) {
  std::set<Edge> es(g.edges().begin(), g.edges().end());
  for (auto e : removals) {
    e = make_edge(e.first, e.second);
    if (es.erase(e) == 0)
      throw EditError("removal of missing edge (" + std::to_string(e.first) +
                      "," + std::to_string(e.second) + ")");
  }
  for (auto e : additions) {
    e = make_edge(e.first, e.second);
    if (e.first == e.second) throw EditError("self-loop addition");
    if (!es.insert(e).second)
      throw EditError("addition of existing edge (" + std::to_string(e.first) +
                      "," + std::to_string(e.second) + ")");
  }
  return Graph(g.num_nodes(), std::vector<Edge>(es.begin(), es.end()));
}

}  // namespace grasp
