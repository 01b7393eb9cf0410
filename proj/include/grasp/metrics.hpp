#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grasp/graph.hpp"

namespace grasp {

/// Per-graph values of the eight structural metrics. Metrics that are
/// undefined for a given graph (edgeless, regular, too small) are nullopt
/// and never silently zeroed.
struct StructuralMetrics {
  std::optional<double> diameter;
  std::optional<double> resistance_total;
  std::optional<double> resistance_avg;
  std::optional<double> modularity;
  std::optional<double> assortativity;
  std::optional<double> clustering;
  std::optional<double> spectral_gap;
  std::optional<double> forman_mean;
  std::optional<double> betweenness_mean;

  std::optional<double> get(const std::string& name) const;
};

/// Canonical metric ordering used in reports.
const std::vector<std::string>& metric_names();

double diameter(const Graph& g);

struct ModularityResult {
  double q = 0.0;
  std::vector<std::vector<int>> partition;
};

/// Greedy agglomerative (CNM-style) modularity maximization, resolution 1.
ModularityResult modularity(const Graph& g);

double modularity_of_partition(const Graph& g,
                               const std::vector<std::vector<int>>& partition);

/// Pearson degree correlation over edge endpoint pairs (both orientations);
/// nullopt when either endpoint-degree variance is zero.
std::optional<double> assortativity(const Graph& g);

double clustering_coefficient(const Graph& g);

struct FormanResult {
  std::map<Edge, double> per_edge;
  double mean = 0.0;
};

/// 1D Forman curvature per edge; with unit weights this is 4 - d_u - d_v.
FormanResult forman_curvature(const Graph& g);

struct BetweennessResult {
  std::vector<double> per_node;
  double mean = 0.0;
};

/// Exact Brandes betweenness, endpoints excluded, normalized by
/// 2/((n-1)(n-2)). Requires n >= 3.
BetweennessResult betweenness(const Graph& g);

StructuralMetrics compute_all(const Graph& g);

struct SummaryEntry {
  double mean = 0.0;
  double std_dev = 0.0;  // population std over defined values
  int undefined_count = 0;
  int defined_count = 0;
  bool all_undefined() const { return defined_count == 0; }
};

/// metric name -> aggregate over a bundle, plus retained per-graph values.
struct MetricSummary {
  std::map<std::string, SummaryEntry> entries;
  std::map<std::string, std::vector<std::optional<double>>> per_graph;
};

MetricSummary summarize(const DatasetBundle& bundle);
MetricSummary summarize(const std::vector<StructuralMetrics>& values);

/// 100*(rew - orig)/orig per metric; nullopt (reported "N/A") when the
/// original mean is zero or either side is undefined.
std::map<std::string, std::optional<double>> percentage_change(
    const MetricSummary& orig, const MetricSummary& rew);

std::optional<double> percentage_change(double mean_orig, double mean_rew);

}  // namespace grasp
