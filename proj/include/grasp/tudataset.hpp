#pragma once

#include <filesystem>
#include <string>

#include "grasp/graph.hpp"

namespace grasp {

/// Loads a dataset in TUDataset flat-file format from `directory`:
/// <name>_A.txt (1-indexed "u, v" edge lines), <name>_graph_indicator.txt
/// (graph id per node line), <name>_graph_labels.txt (label per graph).
/// Nodes are remapped to 0-indexed per-graph ids; directed duplicate pairs
/// collapse to one undirected edge. Attribute files are ignored.
DatasetBundle load_tudataset(const std::filesystem::path& directory,
                             const std::string& name);

struct DatasetStats {
  std::string name;
  int num_graphs = 0;
  int num_classes = 0;
  double avg_nodes = 0.0;
  double avg_edges = 0.0;  // undirected edge count
};

DatasetStats dataset_stats(const DatasetBundle& bundle);

/// Writes a bundle back out in the same flat-file format (round-trip aid).
void save_tudataset(const DatasetBundle& bundle,
                    const std::filesystem::path& directory);

}  // namespace grasp
