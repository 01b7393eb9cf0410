#include "grasp/tudataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace grasp {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw IngestError("cannot open " + p.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // trailing blank lines are tolerated
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (!blank) lines.push_back(line);
  }
  return lines;
}

long parse_int(const std::string& tok, const std::string& context) {
  size_t b = tok.find_first_not_of(" \t");
  size_t e = tok.find_last_not_of(" \t");
  if (b == std::string::npos) throw FormatError("empty token in " + context);
  long value = 0;
  auto res = std::from_chars(tok.data() + b, tok.data() + e + 1, value);
  if (res.ec != std::errc() || res.ptr != tok.data() + e + 1)
    throw FormatError("non-integer token '" + tok + "' in " + context);
  return value;
}

}  // namespace

DatasetBundle load_tudataset(const std::filesystem::path& directory,
                             const std::string& name) {
  auto file = [&](const std::string& suffix) {
    return directory / (name + suffix);
  };
  for (const char* suffix : {"_A.txt", "_graph_indicator.txt", "_graph_labels.txt"}) {
    if (!std::filesystem::exists(file(suffix)))
      throw IngestError("missing file " + file(suffix).string());
  }

  auto indicator_lines = read_lines(file("_graph_indicator.txt"));
  auto label_lines = read_lines(file("_graph_labels.txt"));
  auto edge_lines = read_lines(file("_A.txt"));

  // Global 1-indexed node id -> (graph index, local 0-indexed id).
  int total_nodes = static_cast<int>(indicator_lines.size());
  std::vector<int> node_graph(total_nodes);
  std::vector<int> node_local(total_nodes);
  int num_graphs = static_cast<int>(label_lines.size());
  std::vector<int> graph_size(num_graphs, 0);
  for (int i = 0; i < total_nodes; ++i) {
    long gid = parse_int(indicator_lines[i], name + "_graph_indicator.txt");
    if (gid < 1 || gid > num_graphs)
      throw FormatError("graph indicator " + std::to_string(gid) +
                        " out of range");
    node_graph[i] = static_cast<int>(gid) - 1;
    node_local[i] = graph_size[node_graph[i]]++;
  }

  std::vector<std::set<Edge>> edge_sets(num_graphs);
  for (const auto& line : edge_lines) {
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw FormatError("malformed edge line '" + line + "'");
    long u = parse_int(line.substr(0, comma), name + "_A.txt");
    long v = parse_int(line.substr(comma + 1), name + "_A.txt");
    if (u < 1 || u > total_nodes || v < 1 || v > total_nodes)
      throw FormatError("edge endpoint out of range in " + name + "_A.txt");
    int gu = node_graph[u - 1], gv = node_graph[v - 1];
    if (gu != gv)
      throw FormatError("edge crosses graph boundary in " + name + "_A.txt");
    if (u == v) continue;  // self-loops dropped
    edge_sets[gu].insert(make_edge(node_local[u - 1], node_local[v - 1]));
  }

  DatasetBundle bundle;
  bundle.name = name;
  bundle.graphs.reserve(num_graphs);
  bundle.labels.reserve(num_graphs);
  for (int gi = 0; gi < num_graphs; ++gi) {
    bundle.graphs.emplace_back(
        graph_size[gi],
        std::vector<Edge>(edge_sets[gi].begin(), edge_sets[gi].end()));
    bundle.labels.push_back(
        static_cast<int>(parse_int(label_lines[gi], name + "_graph_labels.txt")));
  }
  return bundle;
}

DatasetStats dataset_stats(const DatasetBundle& bundle) {
  DatasetStats s;
  s.name = bundle.name;
  s.num_graphs = static_cast<int>(bundle.graphs.size());
  std::set<int> classes(bundle.labels.begin(), bundle.labels.end());
  s.num_classes = static_cast<int>(classes.size());
  double nodes = 0, edges = 0;
  for (const auto& g : bundle.graphs) {
    nodes += g.num_nodes();
    edges += g.num_edges();
  }
  if (s.num_graphs > 0) {
    s.avg_nodes = nodes / s.num_graphs;
    s.avg_edges = edges / s.num_graphs;
  }
  return s;
}

void save_tudataset(const DatasetBundle& bundle,
                    const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  auto open = [&](const std::string& suffix) {
    std::ofstream out(directory / (bundle.name + suffix));
    if (!out) throw OutputError("cannot write to " + directory.string());
    return out;
  };
  auto a = open("_A.txt");
  auto ind = open("_graph_indicator.txt");
  auto lab = open("_graph_labels.txt");
  int offset = 0;
  for (size_t gi = 0; gi < bundle.graphs.size(); ++gi) {
    const Graph& g = bundle.graphs[gi];
    for (int v = 0; v < g.num_nodes(); ++v) ind << (gi + 1) << "\n";
    for (const auto& [u, v] : g.edges()) {
      a << (offset + u + 1) << ", " << (offset + v + 1) << "\n";
      a << (offset + v + 1) << ", " << (offset + u + 1) << "\n";
    }
    lab << bundle.labels[gi] << "\n";
    offset += g.num_nodes();
  }
}

}  // namespace grasp
