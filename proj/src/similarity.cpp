#include "grasp/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace grasp {

double jaccard_edges(const Graph& g, const Graph& g2) {
  if (g.num_nodes() != g2.num_nodes())
    throw ShapeError("jaccard requires equal node counts");
  std::set<Edge> a(g.edges().begin(), g.edges().end());
  std::set<Edge> b(g2.edges().begin(), g2.edges().end());
  if (a.empty() && b.empty()) return 1.0;
  std::vector<Edge> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(inter));
  double uni = double(a.size()) + b.size() - inter.size();
  return inter.size() / uni;
}

double laplacian_spectrum_distance(const Graph& g, const Graph& g2, double p,
                                   LaplacianVariant variant) {
  if (g.num_nodes() != g2.num_nodes())
    throw ShapeError("spectrum distance requires equal node counts");
  if (p < 1.0) throw InputError("p must be >= 1");
  auto ev1 = laplacian_spectrum(g, variant);
  auto ev2 = laplacian_spectrum(g2, variant);
  double acc = 0.0;
  for (size_t i = 0; i < ev1.size(); ++i)
    acc += std::pow(std::abs(ev1[i] - ev2[i]), p);
  return std::pow(acc, 1.0 / p);
}

double wasserstein1(const EmpiricalDistribution& a,
                    const EmpiricalDistribution& b) {
  if (a.samples.empty() || b.samples.empty())
    throw InputError("wasserstein1 of empty distribution");
  std::vector<double> xs = a.samples;
  std::vector<double> ys = b.samples;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  // integral of |F_a - F_b| over merged breakpoints
  std::vector<double> pts;
  pts.reserve(xs.size() + ys.size());
  pts.insert(pts.end(), xs.begin(), xs.end());
  pts.insert(pts.end(), ys.begin(), ys.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  double dist = 0.0;
  size_t ia = 0, ib = 0;
  for (size_t k = 0; k + 1 < pts.size(); ++k) {
    while (ia < xs.size() && xs[ia] <= pts[k]) ++ia;
    while (ib < ys.size() && ys[ib] <= pts[k]) ++ib;
    double fa = double(ia) / xs.size();
    double fb = double(ib) / ys.size();
    dist += std::abs(fa - fb) * (pts[k + 1] - pts[k]);
  }
  return dist;
}

EmpiricalDistribution degree_distribution(const Graph& g) {
  EmpiricalDistribution d;
  d.samples.reserve(g.num_nodes());
  for (int v = 0; v < g.num_nodes(); ++v)
    d.samples.push_back(g.degree(v));
  return d;
}

EmpiricalDistribution shortest_path_distribution(const Graph& g) {
  EmpiricalDistribution d;
  for (int s = 0; s < g.num_nodes(); ++s) {
    auto f = bfs_distances(g, s);
    for (int t = s + 1; t < g.num_nodes(); ++t)
      if (f.dist[t] != kUnreachable) d.samples.push_back(f.dist[t]);
  }
  return d;
}

double degree_distribution_distance(const DatasetBundle& orig,
                                    const DatasetBundle& rew) {
  if (orig.graphs.size() != rew.graphs.size())
    throw ShapeError("bundle sizes differ");
  EmpiricalDistribution a, b;
  for (size_t i = 0; i < orig.graphs.size(); ++i) {
    if (orig.graphs[i].num_nodes() != rew.graphs[i].num_nodes())
      throw ShapeError("node counts differ at graph " + std::to_string(i));
    auto da = degree_distribution(orig.graphs[i]);
    auto db = degree_distribution(rew.graphs[i]);
    a.samples.insert(a.samples.end(), da.samples.begin(), da.samples.end());
    b.samples.insert(b.samples.end(), db.samples.begin(), db.samples.end());
  }
  return wasserstein1(a, b);
}

double degree_distribution_distance(const Graph& g, const Graph& g2) {
  if (g.num_nodes() != g2.num_nodes())
    throw ShapeError("degree distance requires equal node counts");
  return wasserstein1(degree_distribution(g), degree_distribution(g2));
}

double shortest_path_distribution_distance(const Graph& g, const Graph& g2) {
  if (g.num_nodes() != g2.num_nodes())
    throw ShapeError("path distance requires equal node counts");
  auto a = shortest_path_distribution(g);
  auto b = shortest_path_distribution(g2);
  if (a.samples.empty() || b.samples.empty())
    throw MetricUndefined("graph has no finite node pair");
  return wasserstein1(a, b);
}

SimilarityReport similarity_report(const Graph& g, const Graph& g2, double p,
                                   LaplacianVariant variant) {
  SimilarityReport r;
  r.jaccard = jaccard_edges(g, g2);
  r.laplacian_spectrum_dist = laplacian_spectrum_distance(g, g2, p, variant);
  r.adjacency_norm_dist = adjacency_spectral_norm_diff(g, g2);
  r.degree_w1 = degree_distribution_distance(g, g2);
  r.sp_length_w1 = shortest_path_distribution_distance(g, g2);
  return r;
}

}  // namespace grasp
