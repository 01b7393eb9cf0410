#include "grasp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <limits>
#include <set>
#include <stack>

#include "grasp/spectral.hpp"

namespace grasp {

const std::vector<std::string>& metric_names() {
  static const std::vector<std::string> names = {
      "diameter",       "resistance_total", "resistance_avg",
      "modularity",     "assortativity",    "clustering",
      "spectral_gap",   "forman_mean",      "betweenness_mean"};
  return names;
}

std::optional<double> StructuralMetrics::get(const std::string& name) const {
  if (name == "diameter") return diameter;
  if (name == "resistance_total") return resistance_total;
  if (name == "resistance_avg") return resistance_avg;
  if (name == "modularity") return modularity;
  if (name == "assortativity") return assortativity;
  if (name == "clustering") return clustering;
  if (name == "spectral_gap") return spectral_gap;
  if (name == "forman_mean") return forman_mean;
  if (name == "betweenness_mean") return betweenness_mean;
  throw InputError("unknown metric '" + name + "'");
}

double diameter(const Graph& g) {
  if (g.num_edges() == 0) throw MetricUndefined("diameter of edgeless graph");
  int best = 0;
  for (int s = 0; s < g.num_nodes(); ++s) {
    auto f = bfs_distances(g, s);
    for (int d : f.dist)
      if (d != kUnreachable) best = std::max(best, d);
  }
  return static_cast<double>(best);
}

double modularity_of_partition(const Graph& g,
                               const std::vector<std::vector<int>>& partition) {
  const double m = g.num_edges();
  if (m < 1) throw MetricUndefined("modularity of edgeless graph");
  std::vector<int> comm(g.num_nodes(), -1);
  for (size_t c = 0; c < partition.size(); ++c)
    for (int v : partition[c]) comm[v] = static_cast<int>(c);
  std::vector<double> intra(partition.size(), 0.0);
  std::vector<double> deg_sum(partition.size(), 0.0);
  for (const auto& [u, v] : g.edges())
    if (comm[u] == comm[v]) intra[comm[u]] += 1.0;
  for (int v = 0; v < g.num_nodes(); ++v)
    if (comm[v] >= 0) deg_sum[comm[v]] += g.degree(v);
  double q = 0.0;
  for (size_t c = 0; c < partition.size(); ++c) {
    double frac = deg_sum[c] / (2.0 * m);
    q += intra[c] / m - frac * frac;
  }
  return q;
}

ModularityResult modularity(const Graph& g) {
  const int n = g.num_nodes();
  const double m = g.num_edges();
  if (m < 1) throw MetricUndefined("modularity of edgeless graph");

  // Agglomerative merge: track community degree sums and inter-community
  // edge counts; merge the best-gain pair, remembering the best partition
  // seen along the full merge path.
  std::vector<std::set<int>> members(n);
  std::vector<double> k(n, 0.0);
  std::map<std::pair<int, int>, double> between;  // community pair -> edges
  std::vector<bool> alive(n, true);
  for (int v = 0; v < n; ++v) {
    members[v] = {v};
    k[v] = g.degree(v);
  }
  for (const auto& [u, v] : g.edges()) between[{u, v}] += 1.0;

  double q = 0.0;  // singletons: no intra edges
  for (int v = 0; v < n; ++v) q -= (k[v] / (2 * m)) * (k[v] / (2 * m));
  double best_q = q;
  std::vector<std::set<int>> best_members = members;
  std::vector<bool> best_alive = alive;

  while (true) {
    double best_gain = -std::numeric_limits<double>::infinity();
    std::pair<int, int> best_pair{-1, -1};
    for (const auto& [pair, e_ab] : between) {
      auto [a, b] = pair;
      if (!alive[a] || !alive[b]) continue;
      double gain = e_ab / m - k[a] * k[b] / (2.0 * m * m);
      if (gain > best_gain + 1e-15 ||
          (gain > best_gain - 1e-15 && pair < best_pair)) {
        best_gain = gain;
        best_pair = pair;
      }
    }
    if (best_pair.first < 0) break;
    auto [a, b] = best_pair;
    // merge b into a
    members[a].insert(members[b].begin(), members[b].end());
    members[b].clear();
    k[a] += k[b];
    alive[b] = false;
    std::map<std::pair<int, int>, double> next;
    for (const auto& [pair, e] : between) {
      auto [x, y] = pair;
      if (x == b) x = a;
      if (y == b) y = a;
      if (x == y) continue;
      next[{std::min(x, y), std::max(x, y)}] += e;
    }
    between = std::move(next);
    q += best_gain;
    if (q > best_q + 1e-12) {
      best_q = q;
      best_members = members;
      best_alive = alive;
    }
  }

  ModularityResult res;
  for (int c = 0; c < n; ++c) {
    if (!best_alive[c] || best_members[c].empty()) continue;
    res.partition.emplace_back(best_members[c].begin(), best_members[c].end());
  }
  std::sort(res.partition.begin(), res.partition.end());
  res.q = modularity_of_partition(g, res.partition);
  return res;
}

std::optional<double> assortativity(const Graph& g) {
  if (g.num_edges() < 1) return std::nullopt;
  // Each undirected edge contributes both (du,dv) and (dv,du).
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  const double cnt = 2.0 * g.num_edges();
  for (const auto& [u, v] : g.edges()) {
    double du = g.degree(u), dv = g.degree(v);
    sx += du + dv;
    sy += du + dv;
    sxx += du * du + dv * dv;
    syy += du * du + dv * dv;
    sxy += 2.0 * du * dv;
  }
  double mx = sx / cnt, my = sy / cnt;
  double vx = sxx / cnt - mx * mx;
  double vy = syy / cnt - my * my;
  if (vx <= 1e-12 || vy <= 1e-12) return std::nullopt;
  return (sxy / cnt - mx * my) / std::sqrt(vx * vy);
}

double clustering_coefficient(const Graph& g) {
  if (g.num_nodes() < 1)
    throw MetricUndefined("clustering of empty graph");
  double sum = 0.0;
  for (int u = 0; u < g.num_nodes(); ++u) {
    int d = g.degree(u);
    if (d < 2) continue;
    const auto& nb = g.neighbors(u);
    long triangles = 0;
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (g.has_edge(nb[i], nb[j])) ++triangles;
    sum += 2.0 * triangles / (double(d) * (d - 1));
  }
  return sum / g.num_nodes();
}

FormanResult forman_curvature(const Graph& g) {
  if (g.num_edges() < 1)
    throw MetricUndefined("Forman curvature of edgeless graph");
  FormanResult res;
  double sum = 0.0;
  for (const auto& [u, v] : g.edges()) {
    double we = g.edge_weight(u, v);
    double wu = g.node_weight(u), wv = g.node_weight(v);
    double val = wu / we + wv / we;
    for (int x : g.neighbors(u)) {
      if (x == v) continue;
      val -= wu / std::sqrt(we * g.edge_weight(u, x));
    }
    for (int x : g.neighbors(v)) {
      if (x == u) continue;
      val -= wv / std::sqrt(we * g.edge_weight(v, x));
    }
    val *= we;
    res.per_edge[{u, v}] = val;
    sum += val;
  }
  res.mean = sum / g.num_edges();
  return res;
}

BetweennessResult betweenness(const Graph& g) {
  const int n = g.num_nodes();
  if (n < 3) throw MetricUndefined("betweenness needs at least three nodes");
  std::vector<double> cb(n, 0.0);
  for (int s = 0; s < n; ++s) {
    std::stack<int> order;
    std::vector<std::vector<int>> pred(n);
    std::vector<double> sigma(n, 0.0);
    std::vector<int> dist(n, -1);
    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push(v);
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          pred[w].push_back(v);
        }
      }
    }
    std::vector<double> delta(n, 0.0);
    while (!order.empty()) {
      int w = order.top();
      order.pop();
      for (int v : pred[w])
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) cb[w] += delta[w];
    }
  }
  // undirected double counting + endpoint-excluded normalization
  const double norm = 1.0 / (double(n - 1) * (n - 2));
  double sum = 0.0;
  for (double& v : cb) {
    v *= norm;
    sum += v;
  }
  BetweennessResult res;
  res.per_node = std::move(cb);
  res.mean = sum / n;
  return res;
}

StructuralMetrics compute_all(const Graph& g) {
  StructuralMetrics sm;
  auto guard = [](auto&& fn) -> std::optional<double> {
    try {
      return fn();
    } catch (const MetricUndefined&) {
      return std::nullopt;
    }
  };
  sm.diameter = guard([&] { return diameter(g); });
  sm.clustering = guard([&] { return clustering_coefficient(g); });
  sm.spectral_gap = guard([&] { return spectral_gap(g); });
  sm.modularity = guard([&] { return modularity(g).q; });
  sm.assortativity = assortativity(g);
  sm.forman_mean = guard([&] { return forman_curvature(g).mean; });
  sm.betweenness_mean = guard([&] { return betweenness(g).mean; });
  try {
    auto r = total_and_average_resistance(g);
    if (r.disconnected) {
      sm.resistance_total = std::nullopt;  // mirrors the nan convention
      sm.resistance_avg = std::nullopt;
    } else {
      sm.resistance_total = r.total;
      sm.resistance_avg = r.average;
    }
  } catch (const MetricUndefined&) {
  }
  return sm;
}

MetricSummary summarize(const std::vector<StructuralMetrics>& values) {
  if (values.empty()) throw InputError("summarize of empty bundle");
  MetricSummary summary;
  for (const auto& name : metric_names()) {
    SummaryEntry entry;
    auto& raw = summary.per_graph[name];
    raw.reserve(values.size());
    double sum = 0.0;
    for (const auto& sm : values) {
      auto v = sm.get(name);
      raw.push_back(v);
      if (v) {
        sum += *v;
        ++entry.defined_count;
      } else {
        ++entry.undefined_count;
      }
    }
    if (entry.defined_count > 0) {
      entry.mean = sum / entry.defined_count;
      double ss = 0.0;
      for (const auto& v : raw)
        if (v) ss += (*v - entry.mean) * (*v - entry.mean);
      entry.std_dev = std::sqrt(ss / entry.defined_count);
    }
    summary.entries[name] = entry;
  }
  return summary;
}

MetricSummary summarize(const DatasetBundle& bundle) {
  std::vector<StructuralMetrics> values;
  values.reserve(bundle.graphs.size());
  for (const auto& g : bundle.graphs) values.push_back(compute_all(g));
  return summarize(values);
}

std::optional<double> percentage_change(double mean_orig, double mean_rew) {
  if (mean_orig == 0.0) return std::nullopt;
  return 100.0 * (mean_rew - mean_orig) / mean_orig;
}

std::map<std::string, std::optional<double>> percentage_change(
    const MetricSummary& orig, const MetricSummary& rew) {
  std::map<std::string, std::optional<double>> out;
  for (const auto& [name, oe] : orig.entries) {
    auto it = rew.entries.find(name);
    if (it == rew.entries.end()) throw InputError("metric key mismatch");
    const auto& re = it->second;
    if (oe.all_undefined() || re.all_undefined()) {
      out[name] = std::nullopt;
    } else {
      out[name] = percentage_change(oe.mean, re.mean);
    }
  }
  return out;
}

}  // namespace grasp
