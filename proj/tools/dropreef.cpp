/*
 * Copyright (c) 2026, the dropreef authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * dropreef: offline graph-redundancy toolkit.
 *
 * Subcommands operate on "bundles": directories holding graph.grf (binary
 * CSR), labels.txt, split.txt, and optionally probs.txt. `ingest` creates a
 * bundle from text inputs; `drop` and `sample` emit new bundles; `wnh`,
 * `probs`, and `analyze` add reports. Every run writes a manifest.json in
 * its output directory listing each emitted file with its content digest.
 */
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dropreef/csr_graph.hpp"
#include "dropreef/drop.hpp"
#include "dropreef/edge_probs.hpp"
#include "dropreef/io.hpp"
#include "dropreef/labels.hpp"
#include "dropreef/metrics.hpp"
#include "dropreef/sampling.hpp"
#include "dropreef/types.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace dropreef;

namespace {

constexpr const char* kGraphFile = "graph.grf";
constexpr const char* kEdgesFile = "edges.txt";
constexpr const char* kLabelsFile = "labels.txt";
constexpr const char* kSplitFile = "split.txt";
constexpr const char* kProbsFile = "probs.txt";
constexpr const char* kManifestFile = "manifest.json";

// Collects stage timings and output digests for the run manifest.
class RunLog {
 public:
  RunLog(std::string command, fs::path out_dir)
      : command_(std::move(command)),
        out_dir_(std::move(out_dir)),
        last_(std::chrono::steady_clock::now()) {
    fs::create_directories(out_dir_);
  }

  void input(const std::string& name, const fs::path& path) {
    inputs_[name] = path.string();
  }

  ordered_json& config() { return config_; }

  // Closes the current stage, charging it the time since the previous call.
  void stage(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    const double seconds =
        std::chrono::duration<double>(now - last_).count();
    last_ = now;
    ordered_json s;
    s["name"] = name;
    s["seconds"] = seconds;
    stages_.push_back(std::move(s));
  }

  // Writes a file into the output directory and records its digest.
  void emit(const std::string& name, std::string_view bytes) {
    write_file_atomic(out_dir_ / name, bytes);
    ordered_json o;
    o["file"] = name;
    o["bytes"] = bytes.size();
    o["fnv1a64"] = digest_hex(fnv1a64(bytes));
    outputs_.push_back(std::move(o));
  }

  // The manifest itself is the one output it cannot list.
  void finish() {
    stage("write");
    ordered_json j;
    j["tool"] = "dropreef";
    j["version"] = kToolVersion;
    j["command"] = command_;
    j["inputs"] = ordered_json::object();
    for (const auto& [k, v] : inputs_) j["inputs"][k] = v;
    j["output_dir"] = out_dir_.string();
    j["config"] = config_;
    j["stages"] = stages_;
    j["outputs"] = outputs_;
    write_file_atomic(out_dir_ / kManifestFile, j.dump(2) + "\n");
  }

  const fs::path& out_dir() const { return out_dir_; }

 private:
  std::string command_;
  fs::path out_dir_;
  std::map<std::string, std::string> inputs_;
  ordered_json config_ = ordered_json::object();
  ordered_json stages_ = ordered_json::array();
  ordered_json outputs_ = ordered_json::array();
  std::chrono::steady_clock::time_point last_;
};

struct Bundle {
  fs::path dir;
  CsrGraph graph;
  LabelMatrix labels;
  SplitMask mask;
  bool has_probs_file{false};
};

Bundle load_bundle(const fs::path& dir) {
  Bundle b;
  b.dir = dir;
  b.graph = read_graph_binary(dir / kGraphFile);
  b.labels = read_labels(dir / kLabelsFile, b.graph.num_nodes);
  b.mask = read_split(dir / kSplitFile, b.graph.num_nodes);
  b.has_probs_file = fs::exists(dir / kProbsFile);
  return b;
}

// Shared --probs/--probs-file handling. `source` is one of auto, uniform,
// jaccard, common-neighbors, file; auto prefers the bundle's probs.txt and
// falls back to uniform.
struct ProbsChoice {
  std::string source{"auto"};
  std::string file;
};

EdgeProbabilities resolve_probs(const Bundle& bundle, const ProbsChoice& choice,
                                unsigned threads, std::string& resolved) {
  std::string source = choice.source;
  if (!choice.file.empty() && source == "auto") source = "file";
  if (source == "file" && choice.file.empty()) {
    throw InputError("--probs file requires --probs-file PATH");
  }
  if (source == "auto") {
    source = bundle.has_probs_file ? "bundle" : "uniform";
  }
  if (source == "uniform") {
    resolved = "uniform";
    return uniform_probs(bundle.graph);
  }
  if (source == "jaccard") {
    resolved = "jaccard";
    return heuristic_probs(bundle.graph, ProbMethod::kJaccard, threads);
  }
  if (source == "common-neighbors") {
    resolved = "common-neighbors";
    return heuristic_probs(bundle.graph, ProbMethod::kCommonNeighbors,
                           threads);
  }
  if (source == "bundle") {
    resolved = (bundle.dir / kProbsFile).string();
    return load_probs(bundle.dir / kProbsFile, bundle.graph);
  }
  resolved = choice.file;
  return load_probs(choice.file, bundle.graph);
}

std::vector<NodeId> subset_nodes(const Bundle& bundle,
                                 const std::string& subset) {
  if (subset == "train") return bundle.mask.nodes_with(Role::kTrain);
  if (subset == "val") return bundle.mask.nodes_with(Role::kVal);
  if (subset == "test") return bundle.mask.nodes_with(Role::kTest);
  std::vector<NodeId> all(bundle.graph.num_nodes);
  for (NodeId v = 0; v < bundle.graph.num_nodes; ++v) all[v] = v;
  return all;
}

void emit_bundle_files(RunLog& log, const CsrGraph& graph,
                       const LabelMatrix& labels, const SplitMask& mask,
                       const EdgeProbabilities* probs) {
  log.emit(kGraphFile, format_graph_binary(graph));
  log.emit(kEdgesFile, format_edge_list(graph));
  log.emit(kLabelsFile, format_labels(labels));
  log.emit(kSplitFile, format_split(mask));
  if (probs != nullptr) log.emit(kProbsFile, format_probs(graph, *probs));
}

// ---------------------------------------------------------------- ingest

struct IngestArgs {
  std::string edges, labels, split, out;
};

void cmd_ingest(const IngestArgs& args) {
  RunLog log("ingest", args.out);
  log.input("edges", args.edges);
  log.input("labels", args.labels);
  log.input("split", args.split);

  LabelMatrix labels = read_labels(args.labels);
  const NodeId num_nodes = labels.num_nodes();
  SplitMask mask = read_split(args.split, num_nodes);
  EdgeListFile edges = read_edge_list(args.edges, num_nodes);
  log.stage("load");

  CsrGraph graph = build_csr(edges.edges, num_nodes);
  graph.validate();
  log.config()["num_nodes"] = graph.num_nodes;
  log.config()["num_edges"] = graph.num_undirected_edges();
  log.stage("build");

  emit_bundle_files(log, graph, labels, mask, nullptr);
  log.finish();
}

// ----------------------------------------------------------------- probs

struct ProbsArgs {
  std::string bundle, method, file, out;
  unsigned threads{1};
};

void cmd_probs(const ProbsArgs& args) {
  const fs::path out = args.out.empty() ? fs::path(args.bundle)
                                        : fs::path(args.out);
  RunLog log("probs", out);
  log.input("bundle", args.bundle);
  Bundle bundle = load_bundle(args.bundle);
  log.stage("load");

  EdgeProbabilities probs;
  if (!args.file.empty()) {
    log.input("probs_file", args.file);
    probs = load_probs(args.file, bundle.graph);
    log.config()["source"] = args.file;
  } else {
    ProbsChoice choice{args.method, ""};
    std::string resolved;
    probs = resolve_probs(bundle, choice, args.threads, resolved);
    log.config()["source"] = resolved;
  }
  probs.validate(bundle.graph);
  log.config()["threads"] = args.threads;
  log.stage("compute");

  log.emit(kProbsFile, format_probs(bundle.graph, probs));
  log.finish();
}

// ------------------------------------------------------------------- wnh

struct WnhArgs {
  std::string bundle, out, subset{"train"};
  ProbsChoice probs;
  unsigned threads{1};
};

void cmd_wnh(const WnhArgs& args) {
  RunLog log("wnh", args.out);
  log.input("bundle", args.bundle);
  Bundle bundle = load_bundle(args.bundle);
  log.stage("load");

  std::string resolved;
  EdgeProbabilities probs =
      resolve_probs(bundle, args.probs, args.threads, resolved);
  const auto subset = subset_nodes(bundle, args.subset);
  NodeMetrics metrics =
      wnh_all(bundle.graph, bundle.labels, probs, subset, args.threads);
  log.config()["probs"] = resolved;
  log.config()["subset"] = args.subset;
  log.config()["threads"] = args.threads;
  log.stage("compute");

  log.emit("wnh.tsv", format_wnh_snapshot(metrics));
  log.finish();
}

// ------------------------------------------------------------------ drop

struct DropArgs {
  std::string bundle, out;
  ProbsChoice probs;
  std::optional<double> th_wnh;
  std::optional<double> wnh_quantile;
  std::optional<NodeId> th_deg;
  std::optional<double> deg_quantile;
  bool retain_edges{false};
  unsigned threads{1};
};

void cmd_drop(const DropArgs& args) {
  if (args.th_wnh.has_value() == args.wnh_quantile.has_value()) {
    throw InputError("exactly one of --th-wnh and --wnh-quantile is required");
  }
  if (args.th_deg.has_value() == args.deg_quantile.has_value()) {
    throw InputError("exactly one of --th-deg and --deg-quantile is required");
  }

  RunLog log("drop", args.out);
  log.input("bundle", args.bundle);
  Bundle bundle = load_bundle(args.bundle);
  log.stage("load");

  std::string resolved;
  EdgeProbabilities probs =
      resolve_probs(bundle, args.probs, args.threads, resolved);
  const auto train = bundle.mask.nodes_with(Role::kTrain);
  NodeMetrics metrics =
      wnh_all(bundle.graph, bundle.labels, probs, train, args.threads);
  log.stage("wnh");

  DropConfig config;
  config.retain_inference_edges = args.retain_edges;
  if (args.th_wnh) {
    config.th_wnh = *args.th_wnh;
  } else {
    std::vector<double> values;
    values.reserve(train.size());
    for (const NodeId v : train) values.push_back(metrics.wnh[v]);
    config.th_wnh = threshold_from_quantile(values, *args.wnh_quantile);
  }
  if (args.th_deg) {
    config.th_deg = *args.th_deg;
  } else {
    std::vector<double> values;
    values.reserve(train.size());
    for (const NodeId v : train) {
      values.push_back(static_cast<double>(metrics.degree[v]));
    }
    config.th_deg = static_cast<NodeId>(
        std::llround(threshold_from_quantile(values, *args.deg_quantile)));
    if (config.th_deg < 1) config.th_deg = 1;
  }
  log.config()["th_wnh"] = config.th_wnh;
  log.config()["th_deg"] = config.th_deg;
  log.config()["retain_edges"] = config.retain_inference_edges;
  log.config()["probs"] = resolved;
  log.config()["threads"] = args.threads;

  const auto redundant =
      detect_redundant(metrics, bundle.graph, bundle.mask, config);
  DropOutput out = drop(bundle.graph, redundant, bundle.mask, config);
  out.report.wnh_snapshot_path = "wnh.tsv";

  LabelMatrix labels;
  EdgeProbabilities out_probs;
  if (config.retain_inference_edges) {
    labels = bundle.labels;
    labels.clear_rows(out.report.dropped);
    out_probs = probs;
  } else {
    labels = bundle.labels.remap(out.map);
    out_probs = probs.remap(bundle.graph, out.graph, out.map);
  }
  log.config()["dropped_count"] = out.report.dropped.size();
  log.stage("drop");

  emit_bundle_files(log, out.graph, labels, out.mask, &out_probs);
  log.emit("node_map.tsv", format_node_map(out.map));
  log.emit("dropped_ids.txt", format_node_ids(out.report.dropped));
  log.emit("wnh.tsv", format_wnh_snapshot(metrics));
  log.emit("drop_report.json",
           format_drop_report_json(out.report, "dropped_ids.txt"));
  log.finish();
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
  std::string bundle, out;
  NodeId budget{0};
  std::uint64_t seed{42};
};

void cmd_sample(const SampleArgs& args) {
  RunLog log("sample", args.out);
  log.input("bundle", args.bundle);
  Bundle bundle = load_bundle(args.bundle);
  log.stage("load");

  auto [subgraph, map] = sample_subgraph(bundle.graph, args.budget, args.seed);
  LabelMatrix labels = bundle.labels.remap(map);
  SplitMask mask = bundle.mask.remap(map);
  std::optional<EdgeProbabilities> probs;
  if (bundle.has_probs_file) {
    probs = load_probs(bundle.dir / kProbsFile, bundle.graph)
                .remap(bundle.graph, subgraph, map);
  }
  log.config()["budget"] = args.budget;
  log.config()["seed"] = args.seed;
  log.stage("sample");

  emit_bundle_files(log, subgraph, labels, mask,
                    probs ? &*probs : nullptr);
  log.emit("node_map.tsv", format_node_map(map));
  log.finish();
}

// --------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string bundle, out, which, format{"tsv"}, subset{"train"};
  ProbsChoice probs;
  double top_fraction{0.5};
  unsigned buckets{5};
  double wnh_top{0.1};
  double deg_top{0.5};
  NodeId budget{0};
  std::uint64_t num_samples{1000};
  NodeId cap{kDefaultSharedNeighborCap};
  NodeId window{3};
  std::uint64_t top_regions{100};
  std::uint64_t seed{42};
  unsigned threads{1};
};

void cmd_analyze(const AnalyzeArgs& args) {
  RunLog log("analyze", args.out);
  log.input("bundle", args.bundle);
  Bundle bundle = load_bundle(args.bundle);
  log.config()["which"] = args.which;
  log.config()["format"] = args.format;
  log.stage("load");

  const bool json = args.format == "json";
  if (args.which == "quantiles") {
    log.config()["top_fraction"] = args.top_fraction;
    log.config()["buckets"] = args.buckets;
    const auto report =
        degree_quantiles(bundle.graph, args.top_fraction, args.buckets);
    log.stage("compute");
    if (json) {
      log.emit("quantiles.json", format_quantiles_json(report));
    } else {
      log.emit("quantiles.tsv", format_quantiles_tsv(report));
    }
  } else if (args.which == "overlap") {
    std::string resolved;
    EdgeProbabilities probs =
        resolve_probs(bundle, args.probs, args.threads, resolved);
    const auto subset = subset_nodes(bundle, args.subset);
    NodeMetrics metrics =
        wnh_all(bundle.graph, bundle.labels, probs, subset, args.threads);
    const auto report = overlap_report(metrics, bundle.graph, args.wnh_top,
                                       args.deg_top, args.buckets);
    log.config()["probs"] = resolved;
    log.config()["subset"] = args.subset;
    log.config()["wnh_top"] = args.wnh_top;
    log.config()["deg_top"] = args.deg_top;
    log.config()["buckets"] = args.buckets;
    log.config()["threads"] = args.threads;
    log.stage("compute");
    if (json) {
      log.emit("overlap.json", format_overlap_json(report));
    } else {
      log.emit("overlap.tsv", format_overlap_tsv(report));
    }
  } else if (args.which == "subgraph-stats") {
    if (args.budget == 0) {
      throw InputError("subgraph-stats requires --budget > 0");
    }
    log.config()["budget"] = args.budget;
    log.config()["num_samples"] = args.num_samples;
    log.config()["seed"] = args.seed;
    log.config()["threads"] = args.threads;
    const auto stats = batch_stats(bundle.graph, args.budget,
                                   args.num_samples, args.seed, args.threads);
    log.stage("compute");
    log.emit("subgraph_stats.json", format_stats_json(stats));
  } else {  // shared-neighbors
    CsrGraph target;
    if (args.budget > 0) {
      auto [subgraph, map] = sample_subgraph(bundle.graph, args.budget,
                                             args.seed);
      target = std::move(subgraph);
      log.emit("node_map.tsv", format_node_map(map));
      log.config()["budget"] = args.budget;
      log.config()["seed"] = args.seed;
    } else {
      target = bundle.graph;
    }
    log.config()["cap"] = args.cap;
    log.config()["window"] = args.window;
    log.config()["top"] = args.top_regions;
    const auto matrix = shared_neighbors(target, args.cap);
    const auto regions =
        region_density(matrix, args.window, args.top_regions);
    log.stage("compute");
    log.emit("shared_neighbors_dense.tsv",
             format_shared_neighbors_dense(matrix));
    log.emit("shared_neighbors_sparse.tsv",
             format_shared_neighbors_sparse(matrix));
    if (json) {
      log.emit("regions.json", format_regions_json(regions));
    } else {
      log.emit("regions.tsv", format_regions_tsv(regions));
    }
  }
  log.finish();
}

void add_probs_flags(CLI::App* cmd, ProbsChoice* choice) {
  cmd->add_option("--probs", choice->source,
                  "Probability source: auto, uniform, jaccard, "
                  "common-neighbors, file (default auto: the bundle's "
                  "probs.txt when present, else uniform)")
      ->check(CLI::IsMember(
          {"auto", "uniform", "jaccard", "common-neighbors", "file"}));
  cmd->add_option("--probs-file", choice->file,
                  "External probability file (implies --probs file)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dropreef: graph redundancy metrics, node dropping, and "
               "subgraph diagnostics"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* cmd_in = app.add_subcommand(
      "ingest", "Build a validated binary bundle from text inputs");
  cmd_in->add_option("--edges", ingest.edges, "Edge list file (u v per line)")
      ->required();
  cmd_in->add_option("--labels", ingest.labels,
                     "Label file, one line of class indices per node")
      ->required();
  cmd_in->add_option("--split", ingest.split,
                     "Split file, one of train/val/test per node")
      ->required();
  cmd_in->add_option("--out", ingest.out, "Output bundle directory")
      ->required();
  cmd_in->callback([&] { cmd_ingest(ingest); });

  ProbsArgs probs;
  auto* cmd_pr = app.add_subcommand(
      "probs", "Attach linking probabilities to a bundle");
  cmd_pr->add_option("--bundle", probs.bundle, "Input bundle directory")
      ->required();
  cmd_pr->add_option("--method", probs.method,
                     "Heuristic: uniform, jaccard, common-neighbors")
      ->check(CLI::IsMember({"uniform", "jaccard", "common-neighbors"}));
  cmd_pr->add_option("--file", probs.file,
                     "Ingest an externally precomputed probability file");
  cmd_pr->add_option("--out", probs.out,
                     "Output directory (default: the bundle itself)");
  cmd_pr->add_option("--threads", probs.threads, "Worker threads");
  cmd_pr->callback([&] {
    if (probs.method.empty() == probs.file.empty()) {
      throw InputError("exactly one of --method and --file is required");
    }
    cmd_probs(probs);
  });

  WnhArgs wnh;
  auto* cmd_w = app.add_subcommand(
      "wnh", "Write the weighted neighbor heterophily snapshot");
  cmd_w->add_option("--bundle", wnh.bundle, "Input bundle directory")
      ->required();
  cmd_w->add_option("--out", wnh.out, "Output directory")->required();
  cmd_w->add_option("--subset", wnh.subset,
                    "Node subset: train, val, test, all (default train)")
      ->check(CLI::IsMember({"train", "val", "test", "all"}));
  add_probs_flags(cmd_w, &wnh.probs);
  cmd_w->add_option("--threads", wnh.threads, "Worker threads");
  cmd_w->callback([&] { cmd_wnh(wnh); });

  DropArgs drop;
  auto* cmd_d = app.add_subcommand(
      "drop", "Remove redundant training nodes and emit the reduced bundle");
  cmd_d->add_option("--bundle", drop.bundle, "Input bundle directory")
      ->required();
  cmd_d->add_option("--out", drop.out, "Output bundle directory")->required();
  double th_wnh_flag = 0, wnh_q_flag = 0, deg_q_flag = 0;
  std::uint64_t th_deg_flag = 0;
  auto* o1 = cmd_d->add_option("--th-wnh", th_wnh_flag, "WNH threshold");
  auto* o2 = cmd_d->add_option("--wnh-quantile", wnh_q_flag,
                               "WNH threshold as a quantile of training WNH");
  auto* o3 = cmd_d->add_option("--th-deg", th_deg_flag, "Degree threshold");
  auto* o4 = cmd_d->add_option(
      "--deg-quantile", deg_q_flag,
      "Degree threshold as a quantile of training degrees");
  cmd_d->add_flag("--retain-edges", drop.retain_edges,
                  "Keep the topology; only unlabel dropped nodes");
  add_probs_flags(cmd_d, &drop.probs);
  cmd_d->add_option("--threads", drop.threads, "Worker threads");
  cmd_d->callback([&] {
    if (*o1) drop.th_wnh = th_wnh_flag;
    if (*o2) drop.wnh_quantile = wnh_q_flag;
    if (*o3) drop.th_deg = static_cast<NodeId>(th_deg_flag);
    if (*o4) drop.deg_quantile = deg_q_flag;
    cmd_drop(drop);
  });

  SampleArgs sample;
  auto* cmd_s = app.add_subcommand(
      "sample", "Materialize one random node-sampled subgraph bundle");
  cmd_s->add_option("--bundle", sample.bundle, "Input bundle directory")
      ->required();
  cmd_s->add_option("--out", sample.out, "Output bundle directory")
      ->required();
  std::uint64_t budget_flag = 0;
  cmd_s->add_option("--budget", budget_flag, "Sample size in nodes")
      ->required();
  cmd_s->add_option("--seed", sample.seed, "Random seed (default 42)");
  cmd_s->callback([&] {
    sample.budget = static_cast<NodeId>(budget_flag);
    cmd_sample(sample);
  });

  AnalyzeArgs analyze;
  auto* cmd_a = app.add_subcommand(
      "analyze", "Degree, overlap, and subgraph structure reports");
  cmd_a->add_option("--bundle", analyze.bundle, "Input bundle directory")
      ->required();
  cmd_a->add_option("--out", analyze.out, "Output directory")->required();
  cmd_a->add_option("--which", analyze.which,
                    "Report: quantiles, overlap, subgraph-stats, "
                    "shared-neighbors")
      ->required()
      ->check(CLI::IsMember(
          {"quantiles", "overlap", "subgraph-stats", "shared-neighbors"}));
  cmd_a->add_option("--format", analyze.format, "Report format: tsv, json")
      ->check(CLI::IsMember({"tsv", "json"}));
  cmd_a->add_option("--top-fraction", analyze.top_fraction,
                    "quantiles: fraction of top-degree nodes tracked");
  cmd_a->add_option("--buckets", analyze.buckets,
                    "quantiles/overlap: bucket count");
  cmd_a->add_option("--wnh-top", analyze.wnh_top,
                    "overlap: top-WNH fraction");
  cmd_a->add_option("--deg-top", analyze.deg_top,
                    "overlap: top-degree fraction tracked");
  cmd_a->add_option("--subset", analyze.subset,
                    "overlap: node subset (default train)")
      ->check(CLI::IsMember({"train", "val", "test", "all"}));
  add_probs_flags(cmd_a, &analyze.probs);
  std::uint64_t a_budget = 0, a_cap = kDefaultSharedNeighborCap, a_window = 3;
  cmd_a->add_option("--budget", a_budget,
                    "subgraph-stats/shared-neighbors: sample size "
                    "(shared-neighbors: 0 = whole graph)");
  cmd_a->add_option("--num-samples", analyze.num_samples,
                    "subgraph-stats: number of samples (default 1000)");
  cmd_a->add_option("--cap", a_cap,
                    "shared-neighbors: dense matrix node cap");
  cmd_a->add_option("--window", a_window,
                    "shared-neighbors: region window size (default 3)");
  cmd_a->add_option("--top", analyze.top_regions,
                    "shared-neighbors: regions to keep, 0 = all");
  cmd_a->add_option("--seed", analyze.seed, "Random seed (default 42)");
  cmd_a->add_option("--threads", analyze.threads, "Worker threads");
  cmd_a->callback([&] {
    analyze.budget = static_cast<NodeId>(a_budget);
    analyze.cap = static_cast<NodeId>(a_cap);
    analyze.window = static_cast<NodeId>(a_window);
    cmd_analyze(analyze);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
