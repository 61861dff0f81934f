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
#include "dropreef/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "dropreef/parallel.hpp"

namespace dropreef {

double hete(const CsrGraph& graph, const LabelMatrix& labels, NodeId v) {
  graph.check_node(v);
  const NodeId deg = graph.degree(v);
  if (deg == 0) return 0.0;
  double sum = 0.0;
  for (NodeId u : graph.neighbors(v)) {
    sum += labels.distance(v, u);
  }
  return sum / static_cast<double>(deg);
}

double wnh(const CsrGraph& graph, const LabelMatrix& labels,
           const EdgeProbabilities& probs, NodeId v) {
  graph.check_node(v);
  if (probs.values.size() != graph.targets.size()) {
    throw InternalError("probabilities not aligned with graph");
  }
  const NodeId deg = graph.degree(v);
  if (deg == 0) return 0.0;
  double sum = 0.0;
  for (EdgeIndex i = graph.offsets[v]; i < graph.offsets[v + 1]; ++i) {
    sum += probs.values[i] * labels.distance(v, graph.targets[i]);
  }
  return sum / static_cast<double>(deg);
}

NodeMetrics wnh_all(const CsrGraph& graph, const LabelMatrix& labels,
                    const EdgeProbabilities& probs,
                    std::span<const NodeId> subset, unsigned threads) {
  NodeMetrics metrics;
  metrics.nodes.assign(subset.begin(), subset.end());
  std::sort(metrics.nodes.begin(), metrics.nodes.end());
  metrics.wnh.assign(graph.num_nodes, 0.0);
  metrics.degree.assign(graph.num_nodes, 0);
  metrics.computed.assign(graph.num_nodes, 0);

  parallel_for(0, metrics.nodes.size(), threads, [&](std::uint64_t i) {
    NodeId v = metrics.nodes[i];
    metrics.wnh[v] = wnh(graph, labels, probs, v);
    metrics.degree[v] = graph.degree(v);
    metrics.computed[v] = 1;
  });
  return metrics;
}

namespace {

// Ids ordered by key descending, ties by ascending id.
template <typename Key>
std::vector<NodeId> rank_descending(std::span<const NodeId> ids, Key&& key) {
  std::vector<NodeId> order(ids.begin(), ids.end());
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (key(a) != key(b)) return key(a) > key(b);
    return a < b;
  });
  return order;
}

struct BucketRange {
  std::size_t begin;
  std::size_t end;
};

// Equal-count split of [0, selected); floor division, last bucket absorbs
// the remainder.
std::vector<BucketRange> split_buckets(std::size_t selected, unsigned buckets) {
  std::vector<BucketRange> out(buckets);
  const std::size_t base = selected / buckets;
  for (unsigned b = 0; b < buckets; ++b) {
    out[b].begin = base * b;
    out[b].end = (b + 1 == buckets) ? selected : base * (b + 1);
  }
  return out;
}

}  // namespace

QuantileReport degree_quantiles(const CsrGraph& graph, double top_fraction,
                                unsigned buckets) {
  if (!(top_fraction > 0.0 && top_fraction <= 1.0)) {
    throw InputError("top fraction must be in (0, 1]");
  }
  if (buckets < 1) {
    throw InputError("bucket count must be >= 1");
  }

  std::vector<NodeId> all(graph.num_nodes);
  std::iota(all.begin(), all.end(), NodeId{0});
  auto order = rank_descending(all, [&](NodeId v) { return graph.degree(v); });

  const auto selected = static_cast<std::size_t>(
      top_fraction * static_cast<double>(graph.num_nodes));

  QuantileReport report;
  report.top_fraction = top_fraction;
  report.total_degree_mass = graph.targets.size();
  const double pct_step = 100.0 * top_fraction / buckets;
  for (auto [begin, end] : split_buckets(selected, buckets)) {
    QuantileReport::Bucket bucket{};
    bucket.lo_pct = pct_step * static_cast<double>(report.buckets.size());
    bucket.hi_pct = pct_step * static_cast<double>(report.buckets.size() + 1);
    bucket.node_count = end - begin;
    for (std::size_t i = begin; i < end; ++i) {
      bucket.degree_sum += graph.degree(order[i]);
    }
    bucket.neighbor_share =
        report.total_degree_mass == 0
            ? 0.0
            : static_cast<double>(bucket.degree_sum) /
                  static_cast<double>(report.total_degree_mass);
    bucket.avg_degree = bucket.node_count == 0
                            ? 0.0
                            : static_cast<double>(bucket.degree_sum) /
                                  static_cast<double>(bucket.node_count);
    report.buckets.push_back(bucket);
  }
  return report;
}

OverlapReport overlap_report(const NodeMetrics& metrics, const CsrGraph& graph,
                             double wnh_top_fraction,
                             double degree_top_fraction, unsigned buckets) {
  if (!(wnh_top_fraction > 0.0 && wnh_top_fraction <= 1.0) ||
      !(degree_top_fraction > 0.0 && degree_top_fraction <= 1.0)) {
    throw InputError("top fractions must be in (0, 1]");
  }
  if (buckets < 1) {
    throw InputError("bucket count must be >= 1");
  }

  const auto& population = metrics.nodes;
  const auto pop_size = population.size();

  auto wnh_order =
      rank_descending(population, [&](NodeId v) { return metrics.wnh[v]; });
  const auto wnh_count = static_cast<std::size_t>(
      wnh_top_fraction * static_cast<double>(pop_size));

  auto deg_order =
      rank_descending(population, [&](NodeId v) { return graph.degree(v); });
  const auto deg_selected = static_cast<std::size_t>(
      degree_top_fraction * static_cast<double>(pop_size));

  // bucket index per node, or -1 outside the tracked degree region
  std::vector<int> bucket_of(graph.num_nodes, -1);
  auto ranges = split_buckets(deg_selected, buckets);
  for (unsigned b = 0; b < buckets; ++b) {
    for (std::size_t i = ranges[b].begin; i < ranges[b].end; ++i) {
      bucket_of[deg_order[i]] = static_cast<int>(b);
    }
  }

  OverlapReport report;
  report.wnh_top_fraction = wnh_top_fraction;
  report.degree_top_fraction = degree_top_fraction;
  report.wnh_top_count = wnh_count;
  report.buckets.resize(buckets);
  const double pct_step = 100.0 * degree_top_fraction / buckets;
  for (unsigned b = 0; b < buckets; ++b) {
    report.buckets[b].lo_pct = pct_step * b;
    report.buckets[b].hi_pct = pct_step * (b + 1);
  }
  for (std::size_t i = 0; i < wnh_count; ++i) {
    int b = bucket_of[wnh_order[i]];
    if (b >= 0) ++report.buckets[b].overlap_count;
  }
  for (auto& bucket : report.buckets) {
    bucket.fraction = wnh_count == 0 ? 0.0
                                     : static_cast<double>(bucket.overlap_count) /
                                           static_cast<double>(wnh_count);
  }
  return report;
}

}  // namespace dropreef
