#pragma once

#include <vector>

#include "grasp/graph.hpp"
#include "grasp/spectral.hpp"

namespace grasp {

/// Multiset of real samples treated as an empirical probability measure.
struct EmpiricalDistribution {
  std::vector<double> samples;
};

/// |E n E'| / |E u E'|; defined as 1 when both edge sets are empty.
double jaccard_edges(const Graph& g, const Graph& g2);

double laplacian_spectrum_distance(
    const Graph& g, const Graph& g2, double p = 2.0,
    LaplacianVariant variant = LaplacianVariant::Combinatorial);

/// Exact W1 between empirical measures via integrated CDF difference;
/// handles unequal sample counts through merged breakpoints.
double wasserstein1(const EmpiricalDistribution& a,
                    const EmpiricalDistribution& b);

EmpiricalDistribution degree_distribution(const Graph& g);

/// Finite pairwise hop distances, i < j; infinite pairs excluded.
EmpiricalDistribution shortest_path_distribution(const Graph& g);

/// W1 between node degrees concatenated over all graphs of each bundle.
double degree_distribution_distance(const DatasetBundle& orig,
                                    const DatasetBundle& rew);

/// Per-graph-pair variant.
double degree_distribution_distance(const Graph& g, const Graph& g2);

double shortest_path_distribution_distance(const Graph& g, const Graph& g2);

struct SimilarityReport {
  double jaccard = 1.0;
  double laplacian_spectrum_dist = 0.0;
  double adjacency_norm_dist = 0.0;
  double degree_w1 = 0.0;
  double sp_length_w1 = 0.0;
};

SimilarityReport similarity_report(
    const Graph& g, const Graph& g2, double p = 2.0,
    LaplacianVariant variant = LaplacianVariant::Combinatorial);

}  // namespace grasp
