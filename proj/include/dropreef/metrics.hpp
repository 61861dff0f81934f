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

#include <cstdint>
#include <span>
#include <vector>

#include "dropreef/csr_graph.hpp"
#include "dropreef/edge_probs.hpp"
#include "dropreef/labels.hpp"

namespace dropreef {

/// Per-node degree and weighted neighbor heterophily over a node subset.
struct NodeMetrics {
  std::vector<NodeId> nodes;     // the subset, ascending
  std::vector<double> wnh;       // full-size; valid where computed
  std::vector<NodeId> degree;    // full-size; valid where computed
  std::vector<std::uint8_t> computed;  // full-size membership flags

  bool has(NodeId v) const { return computed[v] != 0; }
};

/// Neighbor heterophily of v: the mean Euclidean label distance to its
/// neighbors, 0 for isolated nodes. Bounded by sqrt(2) for single-class
/// labels and sqrt(num_classes) in general.
double hete(const CsrGraph& graph, const LabelMatrix& labels, NodeId v);

/// Weighted neighbor heterophily of v: each neighbor term scaled by the
/// edge's linking probability, 0 for isolated nodes. Neighbor terms are
/// summed in ascending neighbor-id order, so results are reproducible.
double wnh(const CsrGraph& graph, const LabelMatrix& labels,
           const EdgeProbabilities& probs, NodeId v);

/// WNH over every node in `subset` (node-parallel; identical results for
/// any worker count).
NodeMetrics wnh_all(const CsrGraph& graph, const LabelMatrix& labels,
                    const EdgeProbabilities& probs,
                    std::span<const NodeId> subset, unsigned threads = 1);

/// Degree-mass distribution of the highest-degree nodes.
///
/// Nodes are sorted by degree descending (ties by ascending id), the top
/// `top_fraction` selected and split into `buckets` equal-count buckets
/// (floor division, last bucket absorbs the remainder). The neighbor share
/// of a bucket is its degree sum over the degree sum of ALL nodes.
struct QuantileReport {
  struct Bucket {
    double lo_pct;              // position in the full sorted list, percent
    double hi_pct;
    std::uint64_t node_count;
    std::uint64_t degree_sum;
    double neighbor_share;
    double avg_degree;
  };
  double top_fraction{0};
  std::uint64_t total_degree_mass{0};  // over all nodes
  std::vector<Bucket> buckets;
};

QuantileReport degree_quantiles(const CsrGraph& graph, double top_fraction,
                                unsigned buckets);

/// Where the highest-WNH nodes sit in the degree ranking.
///
/// Both rankings run over the subset the metrics were computed for. The
/// fraction of a bucket is |top-WNH set ∩ bucket| / |top-WNH set|; the
/// remainder of the top-WNH set lies outside the tracked degree region.
struct OverlapReport {
  struct Bucket {
    double lo_pct;
    double hi_pct;
    std::uint64_t overlap_count;
    double fraction;
  };
  double wnh_top_fraction{0};
  double degree_top_fraction{0};
  std::uint64_t wnh_top_count{0};
  std::vector<Bucket> buckets;
};

OverlapReport overlap_report(const NodeMetrics& metrics, const CsrGraph& graph,
                             double wnh_top_fraction,
                             double degree_top_fraction, unsigned buckets);

}  // namespace dropreef
