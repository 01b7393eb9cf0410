#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grasp/errors.hpp"

namespace grasp {

using Edge = std::pair<int, int>;  // stored with first < second

/// Undirected simple graph on nodes 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() : n_(0) {}

  /// Builds from an edge list. Endpoints are normalized to (min,max) and
  /// the list is sorted. Self-loops, duplicates and out-of-range endpoints
  /// throw InputError.
  Graph(int n, std::vector<Edge> edges);

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const;

  double edge_weight(int u, int v) const;
  double node_weight(int v) const;

  /// Weights are strictly positive; unset entries default to 1.0.
  void set_edge_weight(int u, int v, double w);
  void set_node_weight(int v, double w);

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::map<Edge, double> edge_weight_;
  std::vector<double> node_weight_;
};

inline Edge make_edge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Named graph collection with per-graph integer class labels.
struct DatasetBundle {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<int> labels;
};

constexpr int kUnreachable = -1;

/// Hop distances from a single source; kUnreachable marks other components.
struct DistanceField {
  int source = 0;
  std::vector<int> dist;

  bool reachable(int v) const { return dist[v] != kUnreachable; }
};

DistanceField bfs_distances(const Graph& g, int source);

/// Partition into maximal reachable sets, blocks ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Returns a new graph with the listed edges added and removed. Strict:
/// adding an existing edge or removing a missing one throws EditError.
Graph apply_edits(const Graph& g, const std::vector<Edge>& additions,
                  const std::vector<Edge>& removals);

}  // namespace grasp
