#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grasp/metrics.hpp"
#include "grasp/rewiring.hpp"
#include "grasp/similarity.hpp"
#include "grasp/tudataset.hpp"

namespace grasp {

struct DatasetSpec {
  std::string name;
  std::filesystem::path directory;
};

struct MethodSpec {
  std::string label;  // column label, defaults to the method name
  RewireConfig config;
};

struct PipelineConfig {
  std::vector<DatasetSpec> datasets;
  std::vector<MethodSpec> methods;
  bool compute_similarity = true;
  double laplacian_p = 2.0;
  LaplacianVariant laplacian_variant = LaplacianVariant::Combinatorial;
  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 0;
  int workers = 1;

  void validate() const;
};

/// Parses the JSON config document; unknown keys are rejected.
PipelineConfig parse_config(const std::string& json_text);
PipelineConfig load_config(const std::filesystem::path& path);

struct SimilaritySummary {
  // mean/std of each of the five measures over per-graph pairs
  std::map<std::string, SummaryEntry> per_pair;
  double concatenated_degree_w1 = 0.0;  // dataset-level variant
};

struct CellReport {
  std::string method_label;
  MetricSummary rewired;
  std::map<std::string, std::optional<double>> pct_change;
  EdgeChangeStats edge_stats;
  std::optional<SimilaritySummary> similarity;
  std::vector<std::pair<int, std::string>> failures;  // graph index, reason
  double wall_seconds = 0.0;
};

struct DatasetReport {
  std::string dataset;
  DatasetStats stats;
  MetricSummary original;
  std::vector<CellReport> cells;
  // degree histograms per method label: degree -> (count orig, count rewired)
  std::map<std::string, std::map<int, std::pair<long, long>>> degree_hist;
};

struct RunReport {
  std::vector<DatasetReport> datasets;
  std::string config_echo;
  std::string tool_version;
  double wall_seconds = 0.0;
};

extern const char* kToolVersion;

RunReport run_pipeline(const PipelineConfig& cfg);

/// Writes metrics_/pctchange_/edges_/similarity_/degree_hist_ CSVs and
/// report.json under dir.
void emit_tables(const RunReport& report, const std::filesystem::path& dir);

}  // namespace grasp
