#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grasp/graph.hpp"

namespace grasp {

enum class RewireMethod { SDRF, FOSR, GTR, BORF, LASER, DIGL };

RewireMethod parse_method(const std::string& name);
std::string method_name(RewireMethod m);

struct RewireConfig {
  RewireMethod method = RewireMethod::FOSR;
  int budget = 50;  // max edges to add overall

  // SDRF
  double sdrf_temperature = 20.0;
  double sdrf_removal_bound = std::numeric_limits<double>::infinity();  // C+

  // BORF
  int borf_batches = 3;
  int borf_add_per_batch = 4;     // h
  int borf_remove_per_batch = 2;  // k
  bool borf_keep_connected = true;

  // LASER
  int laser_hop_radius = 3;        // rho
  int laser_snapshots = 3;
  double laser_sample_fraction = 0.1;  // per-snapshot fraction of eligible pairs

  // DIGL
  double digl_alpha = 0.15;
  int digl_top_k = 8;

  std::uint64_t seed = 0;

  void validate() const;
};

struct TraceEntry {
  int iteration = 0;
  Edge edge{-1, -1};
  double score = 0.0;
  bool removal = false;
  std::string note;
};

struct RewireResult {
  Graph graph;
  std::vector<Edge> added;
  std::vector<Edge> removed;
  std::vector<TraceEntry> trace;
};

enum class CurvatureKind { BalancedForman, Ollivier };

struct CurvatureField {
  std::map<Edge, double> values;
  CurvatureKind kind = CurvatureKind::BalancedForman;
};

/// Balanced Forman curvature of an existing edge (triangle and 4-cycle
/// counting variant).
double balanced_forman(const Graph& g, Edge e);

CurvatureField balanced_forman_all(const Graph& g);

/// Optimal transport plan between the uniform neighbor measures of an
/// edge's endpoints; masses are fractions of source/target neighborhoods.
struct TransportPlan {
  std::vector<int> sources;  // N(u)
  std::vector<int> targets;  // N(v)
  std::vector<std::vector<double>> mass;  // sources x targets
  double cost = 0.0;         // = W1
};

/// kappa(u,v) = 1 - W1(m_u, m_v), cost = hop distance, zero idleness.
double ollivier_ricci(const Graph& g, Edge e);
double ollivier_ricci(const Graph& g, Edge e, TransportPlan* plan);

CurvatureField ollivier_ricci_all(const Graph& g);

RewireResult sdrf(const Graph& g, const RewireConfig& cfg);
RewireResult fosr(const Graph& g, const RewireConfig& cfg);
RewireResult gtr(const Graph& g, const RewireConfig& cfg);
RewireResult borf(const Graph& g, const RewireConfig& cfg);
RewireResult laser(const Graph& g, const RewireConfig& cfg);
RewireResult digl_ppr(const Graph& g, const RewireConfig& cfg);

RewireResult rewire(const Graph& g, const RewireConfig& cfg);

/// Per-graph RNG seed; stable under reordering of graphs across workers.
std::uint64_t graph_seed(std::uint64_t global_seed, std::size_t graph_index);

struct EdgeChangeStats {
  double added_pct = 0.0;
  double removed_pct = 0.0;
};

EdgeChangeStats edge_change_stats(const DatasetBundle& orig,
                                  const std::vector<RewireResult>& results);

}  // namespace grasp
