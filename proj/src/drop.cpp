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
 */
#include "dropreef/drop.hpp"

#include <algorithm>
#include <cmath>

#include "dropreef/io.hpp"

namespace dropreef {

void DropConfig::validate() const {
  if (!std::isfinite(th_wnh) || th_wnh < 0.0) {
    throw InputError("th_wnh must be finite and >= 0");
  }
  if (th_deg < 1) {
    throw InputError("th_deg must be >= 1");
  }
}

std::vector<NodeId> detect_redundant(const NodeMetrics& metrics,
                                     const CsrGraph& graph,
                                     const SplitMask& mask,
                                     const DropConfig& config) {
  config.validate();
  if (mask.num_nodes() != graph.num_nodes) {
    throw InternalError("split mask size does not match graph");
  }
  std::vector<NodeId> redundant;
  for (NodeId v = 0; v < graph.num_nodes; ++v) {
    if (mask.roles[v] != Role::kTrain) continue;
    if (!metrics.has(v)) {
      throw InternalError("metrics missing for training node " +
                          std::to_string(v));
    }
    if (metrics.degree[v] >= config.th_deg && metrics.wnh[v] >= config.th_wnh) {
      redundant.push_back(v);
    }
  }
  return redundant;
}

DropOutput drop(const CsrGraph& graph, std::span<const NodeId> redundant,
                const SplitMask& mask, const DropConfig& config) {
  config.validate();
  if (mask.num_nodes() != graph.num_nodes) {
    throw InternalError("split mask size does not match graph");
  }
  std::vector<std::uint8_t> is_dropped(graph.num_nodes, 0);
  for (NodeId v : redundant) {
    graph.check_node(v);
    if (mask.roles[v] != Role::kTrain) {
      throw InputError("node " + std::to_string(v) +
                       " is not a training node; only training nodes may be "
                       "dropped");
    }
    is_dropped[v] = 1;
  }

  DropReport report;
  report.dropped.assign(redundant.begin(), redundant.end());
  std::sort(report.dropped.begin(), report.dropped.end());
  report.dropped.erase(
      std::unique(report.dropped.begin(), report.dropped.end()),
      report.dropped.end());
  report.train_count = mask.count(Role::kTrain);
  report.th_wnh = config.th_wnh;
  report.th_deg = config.th_deg;

  // Removed edges: incident to a dropped node; edges between two dropped
  // nodes would otherwise be counted twice via the degree sum.
  std::uint64_t degree_sum = 0;
  std::uint64_t both_dropped = 0;
  for (NodeId v : report.dropped) {
    degree_sum += graph.degree(v);
    for (NodeId u : graph.neighbors(v)) {
      if (is_dropped[u] && u > v) ++both_dropped;
    }
  }
  report.removed_edge_count = degree_sum - both_dropped;

  // Denominator: undirected edges with at least one training endpoint.
  for (NodeId v = 0; v < graph.num_nodes; ++v) {
    for (NodeId u : graph.neighbors(v)) {
      if (u < v) continue;
      if (mask.roles[v] == Role::kTrain || mask.roles[u] == Role::kTrain) {
        ++report.train_incident_edge_count;
      }
    }
  }

  report.drop_node_ratio =
      report.train_count == 0
          ? 0.0
          : static_cast<double>(report.dropped.size()) /
                static_cast<double>(report.train_count);
  report.drop_edge_ratio =
      report.train_incident_edge_count == 0
          ? 0.0
          : static_cast<double>(report.removed_edge_count) /
                static_cast<double>(report.train_incident_edge_count);

  DropOutput out;
  if (config.retain_inference_edges) {
    out.graph = graph;
    out.map = NodeIdMap::identity(graph.num_nodes);
    out.mask = mask;
    for (NodeId v : report.dropped) {
      out.mask.roles[v] = Role::kDropped;
    }
  } else {
    auto [g, map] = remove_nodes(graph, report.dropped);
    out.graph = std::move(g);
    out.map = std::move(map);
    out.mask = mask.remap(out.map);
  }
  out.report = std::move(report);
  return out;
}

PipelineOutput run_dropreef(const CsrGraph& graph, const LabelMatrix& labels,
                            const EdgeProbabilities& probs,
                            const SplitMask& mask, const DropConfig& config,
                            unsigned threads,
                            const std::string& snapshot_path) {
  config.validate();
  if (labels.num_nodes() != graph.num_nodes ||
      mask.num_nodes() != graph.num_nodes) {
    throw InputError("graph, labels, and split disagree on node count");
  }

  auto train = mask.nodes_with(Role::kTrain);
  NodeMetrics metrics = wnh_all(graph, labels, probs, train, threads);
  if (!snapshot_path.empty()) {
    write_wnh_snapshot(snapshot_path, metrics);
  }

  auto redundant = detect_redundant(metrics, graph, mask, config);
  DropOutput dropped = drop(graph, redundant, mask, config);
  dropped.report.wnh_snapshot_path = snapshot_path;

  PipelineOutput out;
  if (config.retain_inference_edges) {
    out.labels = labels;
    out.labels.clear_rows(dropped.report.dropped);
    out.probs = probs;
  } else {
    out.labels = labels.remap(dropped.map);
    out.probs = probs.remap(graph, dropped.graph, dropped.map);
  }
  out.graph = std::move(dropped.graph);
  out.map = std::move(dropped.map);
  out.mask = std::move(dropped.mask);
  out.metrics = std::move(metrics);
  out.report = std::move(dropped.report);
  return out;
}

double threshold_from_quantile(std::span<const double> values, double q) {
  if (values.empty()) {
    throw InputError("cannot take a quantile of an empty value list");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw InputError("quantile must be in [0, 1]");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto rank = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(sorted.size() - 1)));
  return sorted[rank];
}

}  // namespace dropreef
