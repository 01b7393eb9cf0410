#include "grasp/rewiring.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>

#include "grasp/spectral.hpp"

namespace grasp {

RewireMethod parse_method(const std::string& name) {
  std::string up;
  for (char c : name) up.push_back(std::toupper(static_cast<unsigned char>(c)));
  if (up == "SDRF") return RewireMethod::SDRF;
  if (up == "FOSR") return RewireMethod::FOSR;
  if (up == "GTR") return RewireMethod::GTR;
  if (up == "BORF") return RewireMethod::BORF;
  if (up == "LASER") return RewireMethod::LASER;
  if (up == "DIGL" || up == "PPR") return RewireMethod::DIGL;
  throw ConfigError("unknown rewiring method '" + name + "'");
}

std::string method_name(RewireMethod m) {
  switch (m) {
    case RewireMethod::SDRF: return "SDRF";
    case RewireMethod::FOSR: return "FOSR";
    case RewireMethod::GTR: return "GTR";
    case RewireMethod::BORF: return "BORF";
    case RewireMethod::LASER: return "LASER";
    case RewireMethod::DIGL: return "DIGL";
  }
  return "?";
}

void RewireConfig::validate() const {
  if (budget < 0) throw ConfigError("budget must be >= 0");
  if (sdrf_temperature <= 0) throw ConfigError("SDRF temperature must be > 0");
  if (laser_hop_radius < 2) throw ConfigError("LASER hop radius must be >= 2");
  if (laser_snapshots < 1) throw ConfigError("LASER snapshots must be >= 1");
  if (laser_sample_fraction <= 0 || laser_sample_fraction > 1)
    throw ConfigError("LASER sample fraction must be in (0, 1]");
  if (digl_alpha <= 0 || digl_alpha >= 1)
    throw ConfigError("DIGL alpha must be in (0, 1)");
  if (digl_top_k < 1) throw ConfigError("DIGL top-k must be >= 1");
  if (borf_batches < 0 || borf_add_per_batch < 0 || borf_remove_per_batch < 0)
    throw ConfigError("BORF counts must be >= 0");
}

std::uint64_t graph_seed(std::uint64_t global_seed, std::size_t graph_index) {
  // splitmix64 over the combined value
  std::uint64_t z = global_seed + 0x9e3779b97f4a7c15ULL * (graph_index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Ledger as a diff against the original edge set; apply_edits(original,
// added, removed) reproduces the final graph by construction.
void finalize_ledger(const Graph& original, RewireResult& res) {
  std::set<Edge> before(original.edges().begin(), original.edges().end());
  std::set<Edge> after(res.graph.edges().begin(), res.graph.edges().end());
  res.added.clear();
  res.removed.clear();
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(res.added));
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::back_inserter(res.removed));
}

// Exact min-cost transport between integer supplies/demands with integer
// costs (successive shortest augmenting paths, Bellman-Ford).
struct MinCostFlow {
  struct Arc {
    int to;
    long cap;
    long cost;
    int rev;
  };
  std::vector<std::vector<Arc>> adj;

  explicit MinCostFlow(int n) : adj(n) {}

  void add_arc(int from, int to, long cap, long cost) {
    adj[from].push_back({to, cap, cost, static_cast<int>(adj[to].size())});
    adj[to].push_back({from, 0, -cost, static_cast<int>(adj[from].size()) - 1});
  }

  long solve(int s, int t) {
    long total_cost = 0;
    const long inf = std::numeric_limits<long>::max() / 4;
    while (true) {
      std::vector<long> dist(adj.size(), inf);
      std::vector<int> pv(adj.size(), -1), pe(adj.size(), -1);
      std::vector<bool> inq(adj.size(), false);
      std::deque<int> q{s};
      dist[s] = 0;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        inq[v] = false;
        for (size_t i = 0; i < adj[v].size(); ++i) {
          const Arc& a = adj[v][i];
          if (a.cap > 0 && dist[v] + a.cost < dist[a.to]) {
            dist[a.to] = dist[v] + a.cost;
            pv[a.to] = v;
            pe[a.to] = static_cast<int>(i);
            if (!inq[a.to]) {
              inq[a.to] = true;
              q.push_back(a.to);
            }
          }
        }
      }
      if (dist[t] >= inf) break;
      long push = inf;
      for (int v = t; v != s; v = pv[v])
        push = std::min(push, adj[pv[v]][pe[v]].cap);
      for (int v = t; v != s; v = pv[v]) {
        Arc& a = adj[pv[v]][pe[v]];
        a.cap -= push;
        adj[v][a.rev].cap += push;
      }
      total_cost += push * dist[t];
    }
    return total_cost;
  }
};

}  // namespace

double balanced_forman(const Graph& g, Edge e) {
  e = make_edge(e.first, e.second);
  if (!g.has_edge(e.first, e.second)) throw InputError("not an edge");
  const int i = e.first, j = e.second;
  const double di = g.degree(i), dj = g.degree(j);
  const double dmax = std::max(di, dj), dmin = std::min(di, dj);
  if (dmin <= 1.0 && dmax <= 1.0) return 2.0 / di + 2.0 / dj - 2.0;

  std::set<int> ni(g.neighbors(i).begin(), g.neighbors(i).end());
  std::set<int> nj(g.neighbors(j).begin(), g.neighbors(j).end());
  std::vector<int> tri;
  std::set_intersection(ni.begin(), ni.end(), nj.begin(), nj.end(),
                        std::back_inserter(tri));
  const double n_tri = static_cast<double>(tri.size());

  // 4-cycle neighbors without diagonals: k in N(i)\(N(j) u {j}) with a
  // common neighbor w in N(j)\(N(i) u {i}).
  auto square_side = [&](int a, int b, const std::set<int>& na,
                         const std::set<int>& nb) {
    std::vector<int> out;
    for (int k : na) {
      if (k == b || nb.count(k)) continue;
      for (int w : g.neighbors(k)) {
        if (w == a || na.count(w)) continue;
        if (nb.count(w)) {
          out.push_back(k);
          break;
        }
      }
    }
    return out;
  };
  std::vector<int> sq_i = square_side(i, j, ni, nj);
  std::vector<int> sq_j = square_side(j, i, nj, ni);

  double gamma_max = 0.0;
  std::set<int> sqj_set(sq_j.begin(), sq_j.end());
  std::set<int> sqi_set(sq_i.begin(), sq_i.end());
  for (int k : sq_i) {
    double c = 0;
    for (int w : g.neighbors(k))
      if (sqj_set.count(w)) ++c;
    gamma_max = std::max(gamma_max, c);
  }
  for (int w : sq_j) {
    double c = 0;
    for (int k : g.neighbors(w))
      if (sqi_set.count(k)) ++c;
    gamma_max = std::max(gamma_max, c);
  }

  double val = 2.0 / di + 2.0 / dj - 2.0 + 2.0 * n_tri / dmax + n_tri / dmin;
  if (gamma_max > 0.0)
    val += (sq_i.size() + sq_j.size()) / (gamma_max * dmax);
  return val;
}

CurvatureField balanced_forman_all(const Graph& g) {
  CurvatureField f;
  f.kind = CurvatureKind::BalancedForman;
  for (const auto& e : g.edges()) f.values[e] = balanced_forman(g, e);
  return f;
}

double ollivier_ricci(const Graph& g, Edge e, TransportPlan* plan) {
  e = make_edge(e.first, e.second);
  if (!g.has_edge(e.first, e.second)) throw InputError("not an edge");
  const int u = e.first, v = e.second;
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  const int a = static_cast<int>(nu.size());
  const int b = static_cast<int>(nv.size());

  // hop distances from every source support point
  std::vector<std::vector<long>> cost(a, std::vector<long>(b, 0));
  for (int si = 0; si < a; ++si) {
    auto f = bfs_distances(g, nu[si]);
    for (int tj = 0; tj < b; ++tj) {
      if (f.dist[nv[tj]] == kUnreachable)
        throw NumericError("disconnected transport support");
      cost[si][tj] = f.dist[nv[tj]];
    }
  }

  // scale masses 1/a and 1/b by a*b to integer units
  const long unit = static_cast<long>(a) * b;
  MinCostFlow flow(a + b + 2);
  const int src = a + b, snk = a + b + 1;
  for (int si = 0; si < a; ++si) flow.add_arc(src, si, b, 0);
  for (int tj = 0; tj < b; ++tj) flow.add_arc(a + tj, snk, a, 0);
  for (int si = 0; si < a; ++si)
    for (int tj = 0; tj < b; ++tj) flow.add_arc(si, a + tj, b, cost[si][tj]);
  long total = flow.solve(src, snk);
  double w1 = static_cast<double>(total) / unit;

  if (plan) {
    plan->sources.assign(nu.begin(), nu.end());
    plan->targets.assign(nv.begin(), nv.end());
    plan->mass.assign(a, std::vector<double>(b, 0.0));
    plan->cost = w1;
    // recover flow on source->target arcs from residual capacities
    for (int si = 0; si < a; ++si) {
      for (const auto& arc : flow.adj[si]) {
        if (arc.to >= a && arc.to < a + b && arc.cost >= 0) {
          long sent = b - arc.cap;
          if (sent > 0)
            plan->mass[si][arc.to - a] = static_cast<double>(sent) / unit;
        }
      }
    }
  }
  return 1.0 - w1;
}

double ollivier_ricci(const Graph& g, Edge e) {
  return ollivier_ricci(g, e, nullptr);
}

CurvatureField ollivier_ricci_all(const Graph& g) {
  CurvatureField f;
  f.kind = CurvatureKind::Ollivier;
  for (const auto& e : g.edges()) f.values[e] = ollivier_ricci(g, e);
  return f;
}

RewireResult sdrf(const Graph& g, const RewireConfig& cfg) {
  cfg.validate();
  RewireResult res{g, {}, {}, {}};
  std::mt19937_64 rng(cfg.seed);
  Graph cur = g;
  for (int it = 0; it < cfg.budget; ++it) {
    if (cur.num_edges() == 0) break;
    auto curvature = balanced_forman_all(cur);
    auto worst = std::min_element(
        curvature.values.begin(), curvature.values.end(),
        [](const auto& a, const auto& b) {
          return a.second < b.second ||
                 (a.second == b.second && a.first < b.first);
        });
    Edge target = worst->first;
    double before = worst->second;

    // candidate additions around the most negative edge
    std::vector<int> ku(cur.neighbors(target.first));
    ku.push_back(target.first);
    std::vector<int> lv(cur.neighbors(target.second));
    lv.push_back(target.second);
    std::vector<Edge> candidates;
    std::vector<double> improvement;
    std::set<Edge> seen;
    for (int k : ku) {
      for (int l : lv) {
        if (k == l || cur.has_edge(k, l)) continue;
        Edge cand = make_edge(k, l);
        if (!seen.insert(cand).second) continue;
        Graph trial = apply_edits(cur, {cand}, {});
        candidates.push_back(cand);
        improvement.push_back(balanced_forman(trial, target) - before);
      }
    }
    if (candidates.empty()) {
      res.trace.push_back({it, {-1, -1}, 0.0, false, "no candidate pair"});
      break;
    }
    double best = *std::max_element(improvement.begin(), improvement.end());
    if (best <= 0.0) {
      res.trace.push_back({it, {-1, -1}, best, false, "no improving candidate"});
      break;
    }
    // softmax sample, temperature as sharpness multiplier
    std::vector<double> weights(candidates.size());
    for (size_t c = 0; c < candidates.size(); ++c)
      weights[c] = std::exp(cfg.sdrf_temperature * (improvement[c] - best));
    std::discrete_distribution<size_t> pick(weights.begin(), weights.end());
    size_t chosen = pick(rng);
    cur = apply_edits(cur, {candidates[chosen]}, {});
    res.trace.push_back({it, candidates[chosen], improvement[chosen], false, ""});

    if (std::isfinite(cfg.sdrf_removal_bound)) {
      auto after = balanced_forman_all(cur);
      auto most = std::max_element(
          after.values.begin(), after.values.end(),
          [](const auto& a, const auto& b) {
            return a.second < b.second ||
                   (a.second == b.second && b.first < a.first);
          });
      if (most->second > cfg.sdrf_removal_bound) {
        Edge rm = most->first;
        cur = apply_edits(cur, {}, {rm});
        res.trace.push_back({it, rm, most->second, true, ""});
      }
    }
  }
  res.graph = cur;
  finalize_ledger(g, res);
  return res;
}

RewireResult fosr(const Graph& g, const RewireConfig& cfg) {
  cfg.validate();
  RewireResult res{g, {}, {}, {}};
  const int n = g.num_nodes();
  Graph cur = g;
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = std::sin(1.0 + i);  // deterministic init

  for (int it = 0; it < cfg.budget; ++it) {
    long max_edges = static_cast<long>(n) * (n - 1) / 2;
    if (cur.num_edges() >= max_edges) {
      res.trace.push_back({it, {-1, -1}, 0.0, false, "graph complete"});
      break;
    }
    // power-iteration refresh of the second eigenvector of the normalized
    // adjacency, deflating the dominant sqrt(d) component
    Eigen::VectorXd s(n);
    for (int i = 0; i < n; ++i) s(i) = std::sqrt(double(cur.degree(i)));
    double s2 = s.squaredNorm();
    for (int rep = 0; rep < 16; ++rep) {
      Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
      for (const auto& [u, v] : cur.edges()) {
        double w = 1.0 / std::sqrt(double(cur.degree(u)) * cur.degree(v));
        y(u) += w * x(v);
        y(v) += w * x(u);
      }
      if (s2 > 0) y -= (y.dot(s) / s2) * s;
      double norm = y.norm();
      if (norm < 1e-12) break;
      x = y / norm;
    }

    double best_score = std::numeric_limits<double>::infinity();
    Edge best{-1, -1};
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (cur.has_edge(u, v)) continue;
        double score = x(u) * x(v) /
                       std::sqrt((1.0 + cur.degree(u)) * (1.0 + cur.degree(v)));
        if (score < best_score - 1e-15) {
          best_score = score;
          best = {u, v};
        }
      }
    }
    if (best.first < 0) break;
    cur = apply_edits(cur, {best}, {});
    res.trace.push_back({it, best, best_score, false, ""});
  }
  res.graph = cur;
  finalize_ledger(g, res);
  return res;
}

RewireResult gtr(const Graph& g, const RewireConfig& cfg) {
  cfg.validate();
  if (!is_connected(g))
    throw DisconnectedError("GTR requires a connected graph");
  RewireResult res{g, {}, {}, {}};
  const int n = g.num_nodes();
  Graph cur = g;
  if (n < 2) return res;

  // M = (L + J/n)^{-1} = L^+ + J/n; column differences of M equal those
  // of the true pseudoinverse.
  Eigen::MatrixXd m =
      (laplacian(cur, LaplacianVariant::Combinatorial).mat() +
       Eigen::MatrixXd::Constant(n, n, 1.0 / n))
          .ldlt()
          .solve(Eigen::MatrixXd::Identity(n, n));

  for (int it = 0; it < cfg.budget; ++it) {
    double best_gain = -1.0;
    Edge best{-1, -1};
    double best_denominator = 1.0;
    Eigen::VectorXd best_b;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (cur.has_edge(u, v)) continue;
        Eigen::VectorXd b = m.col(u) - m.col(v);
        double r_uv = m(u, u) + m(v, v) - 2.0 * m(u, v);
        double gain = b.squaredNorm() / (1.0 + r_uv);
        if (gain > best_gain + 1e-15) {
          best_gain = gain;
          best = {u, v};
          best_denominator = 1.0 + r_uv;
          best_b = b;
        }
      }
    }
    if (best.first < 0) {
      res.trace.push_back({it, {-1, -1}, 0.0, false, "graph complete"});
      break;
    }
    cur = apply_edits(cur, {best}, {});
    m -= (best_b * best_b.transpose()) / best_denominator;
    res.trace.push_back({it, best, n * best_gain, false, ""});
  }
  res.graph = cur;
  finalize_ledger(g, res);
  return res;
}

RewireResult borf(const Graph& g, const RewireConfig& cfg) {
  cfg.validate();
  RewireResult res{g, {}, {}, {}};
  Graph cur = g;
  int additions = 0;
  for (int batch = 0; batch < cfg.borf_batches; ++batch) {
    if (cur.num_edges() == 0) break;
    std::vector<std::pair<Edge, TransportPlan>> plans;
    std::vector<std::pair<double, Edge>> scored;
    for (const auto& e : cur.edges()) {
      TransportPlan plan;
      double kappa = ollivier_ricci(cur, e, &plan);
      scored.push_back({kappa, e});
      plans.push_back({e, std::move(plan)});
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      return a.first < b.first || (a.first == b.first && a.second < b.second);
    });

    // additions from the most negatively curved edges
    std::vector<Edge> to_add;
    std::set<Edge> pending(cur.edges().begin(), cur.edges().end());
    for (int h = 0; h < cfg.borf_add_per_batch &&
                    h < static_cast<int>(scored.size());
         ++h) {
      if (additions + static_cast<int>(to_add.size()) >= cfg.budget) break;
      const Edge& e = scored[h].second;
      const TransportPlan* plan = nullptr;
      for (const auto& [pe, pp] : plans)
        if (pe == e) plan = &pp;
      // neighborhood pair carrying maximal transported mass
      double best_mass = 0.0;
      Edge best{-1, -1};
      for (size_t si = 0; si < plan->sources.size(); ++si) {
        for (size_t tj = 0; tj < plan->targets.size(); ++tj) {
          int p = plan->sources[si], q = plan->targets[tj];
          if (p == q) continue;
          Edge cand = make_edge(p, q);
          if (pending.count(cand)) continue;
          double mass = plan->mass[si][tj];
          if (mass > best_mass + 1e-15 ||
              (mass > best_mass - 1e-15 && best.first >= 0 && cand < best)) {
            if (mass > 1e-15) {
              best_mass = mass;
              best = cand;
            }
          }
        }
      }
      if (best.first >= 0) {
        to_add.push_back(best);
        pending.insert(best);
        res.trace.push_back({batch, best, scored[h].first, false, "add"});
      }
    }

    // removals from the most positively curved edges
    std::vector<Edge> to_remove;
    for (int k = 0; k < cfg.borf_remove_per_batch &&
                    k < static_cast<int>(scored.size());
         ++k) {
      const auto& [kappa, e] = scored[scored.size() - 1 - k];
      if (std::find(to_add.begin(), to_add.end(), e) != to_add.end()) continue;
      if (cfg.borf_keep_connected) {
        std::set<Edge> trial(pending);
        trial.erase(e);
        for (const Edge& r : to_remove) trial.erase(r);
        Graph t(cur.num_nodes(), std::vector<Edge>(trial.begin(), trial.end()));
        size_t comps_before = connected_components(cur).size();
        if (connected_components(t).size() > comps_before) {
          res.trace.push_back({batch, e, kappa, true, "skip: would disconnect"});
          continue;
        }
      }
      to_remove.push_back(e);
      res.trace.push_back({batch, e, kappa, true, "remove"});
    }

    cur = apply_edits(cur, to_add, to_remove);
    additions += static_cast<int>(to_add.size());
  }
  res.graph = cur;
  finalize_ledger(g, res);
  return res;
}

RewireResult laser(const Graph& g, const RewireConfig& cfg) {
  cfg.validate();
  RewireResult res{g, {}, {}, {}};
  const int n = g.num_nodes();
  Graph cur = g;
  int additions = 0;
  for (int snap = 0; snap < cfg.laser_snapshots; ++snap) {
    if (additions >= cfg.budget) break;
    // distances and walk counts at snapshot start
    std::vector<DistanceField> dists;
    dists.reserve(n);
    for (int s = 0; s < n; ++s) dists.push_back(bfs_distances(cur, s));
    Eigen::MatrixXd a = adjacency_matrix(cur).mat();
    Eigen::MatrixXd power = a;

    std::vector<Edge> to_add;
    std::set<Edge> pending(cur.edges().begin(), cur.edges().end());
    for (int r = 2; r <= cfg.laser_hop_radius; ++r) {
      power = (power * a).eval();  // walk counts of length r
      std::vector<std::pair<double, Edge>> eligible;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (dists[u].dist[v] == r) eligible.push_back({power(u, v), {u, v}});
      if (eligible.empty()) continue;
      std::sort(eligible.begin(), eligible.end(),
                [](const auto& x, const auto& y) {
                  return x.first < y.first ||
                         (x.first == y.first && x.second < y.second);
                });
      int quota = std::max<int>(
          1, static_cast<int>(std::llround(cfg.laser_sample_fraction *
                                           eligible.size())));
      for (int i = 0; i < quota && i < static_cast<int>(eligible.size()); ++i) {
        if (additions + static_cast<int>(to_add.size()) >= cfg.budget) break;
        const Edge& e = eligible[i].second;
        if (pending.count(e)) continue;
        to_add.push_back(e);
        pending.insert(e);
        res.trace.push_back({snap, e, eligible[i].first, false,
                             "r=" + std::to_string(r)});
      }
    }
    if (to_add.empty()) break;
    cur = apply_edits(cur, to_add, {});
    additions += static_cast<int>(to_add.size());
  }
  res.graph = cur;
  finalize_ledger(g, res);
  return res;
}

RewireResult digl_ppr(const Graph& g, const RewireConfig& cfg) {
  cfg.validate();
  RewireResult res{g, {}, {}, {}};
  const int n = g.num_nodes();
  if (n == 0) return res;

  // Pi = alpha (I - (1-alpha) A D^-1)^-1
  Eigen::MatrixXd walk = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    walk(u, v) = 1.0 / g.degree(v);
    walk(v, u) = 1.0 / g.degree(u);
  }
  Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(n, n) - (1.0 - cfg.digl_alpha) * walk;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  Eigen::MatrixXd pi = cfg.digl_alpha *
                       lu.solve(Eigen::MatrixXd::Identity(n, n));
  if (!pi.allFinite()) throw NumericError("PPR solve produced non-finite values");

  // per-node top-k partners, symmetrized union; original edges retained so
  // the method is purely additive
  std::set<Edge> kept(g.edges().begin(), g.edges().end());
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<double, int>> ranked;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      double score = std::max(pi(u, v), pi(v, u));
      if (score > 0.0) ranked.push_back({score, u});
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return a.first > b.first || (a.first == b.first && a.second < b.second);
    });
    for (int k = 0; k < cfg.digl_top_k && k < static_cast<int>(ranked.size());
         ++k) {
      Edge e = make_edge(v, ranked[k].second);
      if (kept.insert(e).second)
        res.trace.push_back({0, e, ranked[k].first, false, ""});
    }
  }
  res.graph = Graph(n, std::vector<Edge>(kept.begin(), kept.end()));
  finalize_ledger(g, res);
  return res;
}

RewireResult rewire(const Graph& g, const RewireConfig& cfg) {
  switch (cfg.method) {
    case RewireMethod::SDRF: return sdrf(g, cfg);
    case RewireMethod::FOSR: return fosr(g, cfg);
    case RewireMethod::GTR: return gtr(g, cfg);
    case RewireMethod::BORF: return borf(g, cfg);
    case RewireMethod::LASER: return laser(g, cfg);
    case RewireMethod::DIGL: return digl_ppr(g, cfg);
  }
  throw ConfigError("unknown method");
}

EdgeChangeStats edge_change_stats(const DatasetBundle& orig,
                                  const std::vector<RewireResult>& results) {
  if (orig.graphs.size() != results.size())
    throw ShapeError("bundle/result size mismatch");
  double original_edges = 0, added = 0, removed = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    original_edges += orig.graphs[i].num_edges();
    added += results[i].added.size();
    removed += results[i].removed.size();
  }
  EdgeChangeStats s;
  if (original_edges > 0) {
    s.added_pct = 100.0 * added / original_edges;
    s.removed_pct = 100.0 * removed / original_edges;
  }
  return s;
}

}  // namespace grasp
