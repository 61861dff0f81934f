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
#pragma once

#include <span>
#include <string>
#include <vector>

#include "dropreef/csr_graph.hpp"
#include "dropreef/edge_probs.hpp"
#include "dropreef/labels.hpp"
#include "dropreef/metrics.hpp"

namespace dropreef {

/// Redundancy thresholds. A training node is redundant when its degree is
/// >= th_deg AND its WNH is >= th_wnh (both comparisons inclusive).
///
/// With retain_inference_edges off (the default) dropped nodes leave the
/// graph together with every incident edge. With it on, the topology is kept
/// intact for inference exports: dropped nodes stay present but lose their
/// labels and move to the kDropped split role.
struct DropConfig {
  double th_wnh{0.0};
  NodeId th_deg{1};
  bool retain_inference_edges{false};

  void validate() const;
};

struct DropReport {
  std::vector<NodeId> dropped;  // original ids, ascending
  std::uint64_t train_count{0};
  double drop_node_ratio{0.0};  // dropped / training nodes
  double drop_edge_ratio{0.0};  // removed edges / edges with a training endpoint
  std::uint64_t removed_edge_count{0};
  std::uint64_t train_incident_edge_count{0};
  double th_wnh{0.0};
  NodeId th_deg{1};
  std::string wnh_snapshot_path;
};

/// Redundant training nodes: { v in train : degree >= th_deg and
/// wnh >= th_wnh }, ascending. Metrics must cover every training node.
std::vector<NodeId> detect_redundant(const NodeMetrics& metrics,
                                     const CsrGraph& graph,
                                     const SplitMask& mask,
                                     const DropConfig& config);

struct DropOutput {
  CsrGraph graph;
  NodeIdMap map;
  SplitMask mask;
  DropReport report;
};

/// Drops the redundant set (which must lie inside the training set) and
/// builds the drop report. Labels and probabilities are remapped by the
/// caller through the returned NodeIdMap.
DropOutput drop(const CsrGraph& graph, std::span<const NodeId> redundant,
                const SplitMask& mask, const DropConfig& config);

struct PipelineOutput {
  CsrGraph graph;
  NodeIdMap map;
  SplitMask mask;
  LabelMatrix labels;
  EdgeProbabilities probs;
  NodeMetrics metrics;
  DropReport report;
};

/// The whole offline pipeline: WNH over the training nodes, redundancy
/// detection, drop, and remap of labels/probabilities. When snapshot_path
/// is nonempty the per-node WNH values are persisted there first.
PipelineOutput run_dropreef(const CsrGraph& graph, const LabelMatrix& labels,
                            const EdgeProbabilities& probs,
                            const SplitMask& mask, const DropConfig& config,
                            unsigned threads = 1,
                            const std::string& snapshot_path = {});

/// Nearest-rank quantile: the value at rank ceil(q * (n - 1)) of the
/// ascending-sorted values. q=0 gives the minimum, q=1 the maximum.
double threshold_from_quantile(std::span<const double> values, double q);

}  // namespace dropreef
