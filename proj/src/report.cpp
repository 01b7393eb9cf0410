#include "grasp/report.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace grasp {

using nlohmann::json;

const char* kToolVersion = "0.1.0";

void PipelineConfig::validate() const {
  if (datasets.empty()) throw ConfigError("at least one dataset is required");
  if (methods.empty()) throw ConfigError("at least one method is required");
  if (laplacian_p < 1.0) throw ConfigError("laplacian_p must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  for (const auto& m : methods) m.config.validate();
}

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> keys,
                    const std::string& context) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys)
      if (it.key() == k) known = true;
    if (!known)
      throw ConfigError("unknown key '" + it.key() + "' in " + context);
  }
}

RewireConfig parse_method_config(const json& j) {
  RewireConfig cfg;
  reject_unknown(j,
                 {"method", "label", "budget", "sdrf_temperature",
                  "sdrf_removal_bound", "borf_batches", "borf_add_per_batch",
                  "borf_remove_per_batch", "borf_keep_connected",
                  "laser_hop_radius", "laser_snapshots",
                  "laser_sample_fraction", "digl_alpha", "digl_top_k"},
                 "method entry");
  cfg.method = parse_method(j.at("method").get<std::string>());
  if (j.contains("budget")) cfg.budget = j["budget"].get<int>();
  if (j.contains("sdrf_temperature"))
    cfg.sdrf_temperature = j["sdrf_temperature"].get<double>();
  if (j.contains("sdrf_removal_bound"))
    cfg.sdrf_removal_bound = j["sdrf_removal_bound"].get<double>();
  if (j.contains("borf_batches")) cfg.borf_batches = j["borf_batches"].get<int>();
  if (j.contains("borf_add_per_batch"))
    cfg.borf_add_per_batch = j["borf_add_per_batch"].get<int>();
  if (j.contains("borf_remove_per_batch"))
    cfg.borf_remove_per_batch = j["borf_remove_per_batch"].get<int>();
  if (j.contains("borf_keep_connected"))
    cfg.borf_keep_connected = j["borf_keep_connected"].get<bool>();
  if (j.contains("laser_hop_radius"))
    cfg.laser_hop_radius = j["laser_hop_radius"].get<int>();
  if (j.contains("laser_snapshots"))
    cfg.laser_snapshots = j["laser_snapshots"].get<int>();
  if (j.contains("laser_sample_fraction"))
    cfg.laser_sample_fraction = j["laser_sample_fraction"].get<double>();
  if (j.contains("digl_alpha")) cfg.digl_alpha = j["digl_alpha"].get<double>();
  if (j.contains("digl_top_k")) cfg.digl_top_k = j["digl_top_k"].get<int>();
  return cfg;
}

void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  workers = std::max(1, std::min(workers, count));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        int i;
        while ((i = next.fetch_add(1)) < count) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string fmt3(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

std::string cell(const std::optional<double>& v) {
  return v ? fmt3(*v) : "NaN";
}

json summary_to_json(const MetricSummary& s) {
  json out;
  for (const auto& name : metric_names()) {
    const auto& e = s.entries.at(name);
    json entry;
    entry["mean"] = e.all_undefined() ? json() : json(e.mean);
    entry["std"] = e.all_undefined() ? json() : json(e.std_dev);
    entry["undefined_count"] = e.undefined_count;
    json raw = json::array();
    for (const auto& v : s.per_graph.at(name))
      raw.push_back(v ? json(*v) : json());
    entry["per_graph"] = raw;
    out[name] = entry;
  }
  return out;
}

SummaryEntry aggregate(const std::vector<std::optional<double>>& values) {
  SummaryEntry e;
  double sum = 0;
  for (const auto& v : values) {
    if (v) {
      sum += *v;
      ++e.defined_count;
    } else {
      ++e.undefined_count;
    }
  }
  if (e.defined_count > 0) {
    e.mean = sum / e.defined_count;
    double ss = 0;
    for (const auto& v : values)
      if (v) ss += (*v - e.mean) * (*v - e.mean);
    e.std_dev = std::sqrt(ss / e.defined_count);
  }
  return e;
}

}  // namespace

PipelineConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  PipelineConfig cfg;
  try {
    reject_unknown(j,
                   {"datasets", "methods", "similarity", "laplacian_p",
                    "laplacian_variant", "output_dir", "seed", "workers"},
                   "config root");
    for (const auto& d : j.at("datasets")) {
      reject_unknown(d, {"name", "directory"}, "dataset entry");
      cfg.datasets.push_back({d.at("name").get<std::string>(),
                              d.at("directory").get<std::string>()});
    }
    for (const auto& m : j.at("methods")) {
      MethodSpec spec;
      spec.config = parse_method_config(m);
      spec.label = m.contains("label") ? m["label"].get<std::string>()
                                       : method_name(spec.config.method);
      cfg.methods.push_back(spec);
    }
    if (j.contains("similarity")) cfg.compute_similarity = j["similarity"].get<bool>();
    if (j.contains("laplacian_p")) cfg.laplacian_p = j["laplacian_p"].get<double>();
    if (j.contains("laplacian_variant")) {
      std::string v = j["laplacian_variant"].get<std::string>();
      if (v == "combinatorial")
        cfg.laplacian_variant = LaplacianVariant::Combinatorial;
      else if (v == "sym_normalized")
        cfg.laplacian_variant = LaplacianVariant::SymNormalized;
      else
        throw ConfigError("laplacian_variant must be combinatorial or sym_normalized");
    }
    if (j.contains("output_dir"))
      cfg.output_dir = j["output_dir"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

RunReport run_pipeline(const PipelineConfig& cfg) {
  cfg.validate();
  int workers = cfg.workers;
  if (const char* env = std::getenv("GRASP_WORKERS")) {
    workers = std::max(1, std::atoi(env));
  }
  auto t0 = std::chrono::steady_clock::now();

  RunReport report;
  report.tool_version = kToolVersion;
  {
    json echo;
    echo["datasets"] = json::array();
    for (const auto& d : cfg.datasets)
      echo["datasets"].push_back({{"name", d.name},
                                  {"directory", d.directory.string()}});
    echo["methods"] = json::array();
    for (const auto& m : cfg.methods) {
      const auto& c = m.config;
      echo["methods"].push_back(
          {{"method", method_name(c.method)},
           {"label", m.label},
           {"budget", c.budget},
           {"sdrf_temperature", c.sdrf_temperature},
           {"sdrf_removal_bound",
            std::isfinite(c.sdrf_removal_bound) ? json(c.sdrf_removal_bound)
                                                : json("inf")},
           {"borf_batches", c.borf_batches},
           {"borf_add_per_batch", c.borf_add_per_batch},
           {"borf_remove_per_batch", c.borf_remove_per_batch},
           {"borf_keep_connected", c.borf_keep_connected},
           {"laser_hop_radius", c.laser_hop_radius},
           {"laser_snapshots", c.laser_snapshots},
           {"laser_sample_fraction", c.laser_sample_fraction},
           {"digl_alpha", c.digl_alpha},
           {"digl_top_k", c.digl_top_k}});
    }
    echo["similarity"] = cfg.compute_similarity;
    echo["laplacian_p"] = cfg.laplacian_p;
    echo["laplacian_variant"] =
        cfg.laplacian_variant == LaplacianVariant::Combinatorial
            ? "combinatorial"
            : "sym_normalized";
    echo["output_dir"] = cfg.output_dir.string();
    echo["seed"] = cfg.seed;
    echo["workers"] = cfg.workers;
    report.config_echo = echo.dump(2);
  }

  for (const auto& spec : cfg.datasets) {
    DatasetBundle bundle = load_tudataset(spec.directory, spec.name);
    const int ng = static_cast<int>(bundle.graphs.size());

    DatasetReport dr;
    dr.dataset = spec.name;
    dr.stats = dataset_stats(bundle);

    std::vector<StructuralMetrics> original(ng);
    parallel_for(ng, workers,
                 [&](int i) { original[i] = compute_all(bundle.graphs[i]); });
    dr.original = summarize(original);

    for (const auto& method : cfg.methods) {
      auto c0 = std::chrono::steady_clock::now();
      CellReport cell_report;
      cell_report.method_label = method.label;

      std::vector<std::optional<RewireResult>> results(ng);
      std::vector<std::string> errors(ng);
      parallel_for(ng, workers, [&](int i) {
        RewireConfig rc = method.config;
        rc.seed = graph_seed(cfg.seed ^ rc.seed, static_cast<size_t>(i));
        try {
          results[i] = rewire(bundle.graphs[i], rc);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      });

      std::vector<int> ok;
      for (int i = 0; i < ng; ++i) {
        if (results[i])
          ok.push_back(i);
        else
          cell_report.failures.push_back({i, errors[i]});
      }

      std::vector<StructuralMetrics> rewired_metrics(ok.size());
      parallel_for(static_cast<int>(ok.size()), workers, [&](int k) {
        rewired_metrics[k] = compute_all(results[ok[k]]->graph);
      });
      if (!ok.empty()) {
        cell_report.rewired = summarize(rewired_metrics);
        cell_report.pct_change =
            percentage_change(dr.original, cell_report.rewired);

        DatasetBundle ok_orig{bundle.name, {}, {}};
        std::vector<RewireResult> ok_results;
        for (int i : ok) {
          ok_orig.graphs.push_back(bundle.graphs[i]);
          ok_orig.labels.push_back(bundle.labels[i]);
          ok_results.push_back(*results[i]);
        }
        cell_report.edge_stats = edge_change_stats(ok_orig, ok_results);

        // degree histograms feeding the distribution plots
        auto& hist = dr.degree_hist[method.label];
        for (size_t k = 0; k < ok_results.size(); ++k) {
          const Graph& go = ok_orig.graphs[k];
          const Graph& gr = ok_results[k].graph;
          for (int v = 0; v < go.num_nodes(); ++v) {
            hist[go.degree(v)].first++;
            hist[gr.degree(v)].second++;
          }
        }

        if (cfg.compute_similarity) {
          SimilaritySummary sim;
          std::vector<SimilarityReport> reports(ok.size());
          parallel_for(static_cast<int>(ok.size()), workers, [&](int k) {
            reports[k] = similarity_report(ok_orig.graphs[k],
                                           ok_results[k].graph, cfg.laplacian_p,
                                           cfg.laplacian_variant);
          });
          auto collect = [&](const std::string& name, auto&& get) {
            std::vector<std::optional<double>> vals;
            for (const auto& r : reports) vals.push_back(get(r));
            sim.per_pair[name] = aggregate(vals);
          };
          collect("jaccard", [](const auto& r) { return r.jaccard; });
          collect("laplacian_spectrum_dist",
                  [](const auto& r) { return r.laplacian_spectrum_dist; });
          collect("adjacency_norm_dist",
                  [](const auto& r) { return r.adjacency_norm_dist; });
          collect("degree_w1", [](const auto& r) { return r.degree_w1; });
          collect("sp_length_w1", [](const auto& r) { return r.sp_length_w1; });

          DatasetBundle rew{bundle.name, {}, {}};
          for (size_t k = 0; k < ok_results.size(); ++k) {
            rew.graphs.push_back(ok_results[k].graph);
            rew.labels.push_back(ok_orig.labels[k]);
          }
          sim.concatenated_degree_w1 =
              degree_distribution_distance(ok_orig, rew);
          cell_report.similarity = std::move(sim);
        }
      }
      cell_report.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - c0)
              .count();
      dr.cells.push_back(std::move(cell_report));
    }
    report.datasets.push_back(std::move(dr));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

void emit_tables(const RunReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto open = [&](const std::string& name) {
    std::ofstream out(dir / name);
    if (!out) throw OutputError("cannot write " + (dir / name).string());
    return out;
  };

  for (const auto& dr : report.datasets) {
    {
      auto out = open("metrics_" + dr.dataset + ".csv");
      out << "metric,method,mean,std,undefined_count\n";
      auto row = [&](const std::string& method, const MetricSummary& s) {
        for (const auto& name : metric_names()) {
          const auto& e = s.entries.at(name);
          out << name << "," << method << ",";
          if (e.all_undefined())
            out << "NaN,NaN";
          else
            out << fmt3(e.mean) << "," << fmt3(e.std_dev);
          out << "," << e.undefined_count << "\n";
        }
      };
      row("Original", dr.original);
      for (const auto& c : dr.cells)
        if (!c.rewired.entries.empty()) row(c.method_label, c.rewired);
    }
    {
      auto out = open("pctchange_" + dr.dataset + ".csv");
      out << "metric,method,pct_change\n";
      for (const auto& c : dr.cells) {
        for (const auto& name : metric_names()) {
          out << name << "," << c.method_label << ",";
          auto it = c.pct_change.find(name);
          if (it == c.pct_change.end() || !it->second)
            out << "N/A";
          else
            out << fmt3(*it->second);
          out << "\n";
        }
      }
    }
    {
      auto out = open("edges_" + dr.dataset + ".csv");
      out << "method,added_pct,removed_pct\n";
      for (const auto& c : dr.cells)
        out << c.method_label << "," << fmt3(c.edge_stats.added_pct) << ","
            << fmt3(c.edge_stats.removed_pct) << "\n";
    }
    {
      auto out = open("similarity_" + dr.dataset + ".csv");
      out << "method,measure,variant,mean,std\n";
      for (const auto& c : dr.cells) {
        if (!c.similarity) continue;
        for (const auto& [name, e] : c.similarity->per_pair)
          out << c.method_label << "," << name << ",per_pair,"
              << cell(e.all_undefined() ? std::nullopt
                                        : std::optional<double>(e.mean))
              << "," << fmt3(e.std_dev) << "\n";
        out << c.method_label << ",degree_w1,concatenated,"
            << fmt3(c.similarity->concatenated_degree_w1) << ",0.000\n";
      }
    }
    for (const auto& [label, hist] : dr.degree_hist) {
      auto out = open("degree_hist_" + dr.dataset + "_" + label + ".csv");
      const CellReport* cr = nullptr;
      for (const auto& c : dr.cells)
        if (c.method_label == label) cr = &c;
      std::string w1 = cr && cr->similarity
                           ? fmt3(cr->similarity->concatenated_degree_w1)
                           : "";
      out << "degree,count_original,count_rewired,w1_annotation\n";
      for (const auto& [deg, counts] : hist)
        out << deg << "," << counts.first << "," << counts.second << "," << w1
            << "\n";
    }
  }

  json j;
  j["tool_version"] = report.tool_version;
  j["wall_seconds"] = report.wall_seconds;
  j["generated_at"] = []() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return std::string(buf);
  }();
  j["config"] = json::parse(report.config_echo);
  j["datasets"] = json::array();
  for (const auto& dr : report.datasets) {
    json d;
    d["name"] = dr.dataset;
    d["stats"] = {{"num_graphs", dr.stats.num_graphs},
                  {"num_classes", dr.stats.num_classes},
                  {"avg_nodes", dr.stats.avg_nodes},
                  {"avg_edges", dr.stats.avg_edges}};
    d["original"] = summary_to_json(dr.original);
    d["methods"] = json::array();
    for (const auto& c : dr.cells) {
      json m;
      m["label"] = c.method_label;
      m["wall_seconds"] = c.wall_seconds;
      if (!c.rewired.entries.empty()) m["rewired"] = summary_to_json(c.rewired);
      json pct;
      for (const auto& [name, v] : c.pct_change)
        pct[name] = v ? json(*v) : json();
      m["pct_change"] = pct;
      m["edges"] = {{"added_pct", c.edge_stats.added_pct},
                    {"removed_pct", c.edge_stats.removed_pct}};
      if (c.similarity) {
        json sim;
        for (const auto& [name, e] : c.similarity->per_pair)
          sim[name] = {{"mean", e.mean},
                       {"std", e.std_dev},
                       {"undefined_count", e.undefined_count}};
        sim["concatenated_degree_w1"] = c.similarity->concatenated_degree_w1;
        m["similarity"] = sim;
      }
      json fails = json::array();
      for (const auto& [idx, why] : c.failures)
        fails.push_back({{"graph", idx}, {"error", why}});
      m["failures"] = fails;
      d["methods"].push_back(m);
    }
    j["datasets"].push_back(d);
  }
  {
    auto out = open("report.json");
    out << j.dump(2) << "\n";
  }

  // per-graph rewiring failures, one file per run
  bool any_fail = false;
  for (const auto& dr : report.datasets)
    for (const auto& c : dr.cells)
      if (!c.failures.empty()) any_fail = true;
  if (any_fail) {
    auto out = open("exceptions.txt");
    for (const auto& dr : report.datasets)
      for (const auto& c : dr.cells)
        for (const auto& [idx, why] : c.failures)
          out << dr.dataset << "," << c.method_label << "," << idx << ","
              << why << "\n";
  }
}

}  // namespace grasp
