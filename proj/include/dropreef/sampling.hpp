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
#include <utility>
#include <vector>

#include "dropreef/csr_graph.hpp"

namespace dropreef {

inline constexpr NodeId kDefaultSharedNeighborCap = 10000;

/// Uniform node sample without replacement, size = budget, reproducible
/// from the seed (partial Fisher-Yates over mt19937_64). Returned ascending.
std::vector<NodeId> sample_nodes(const CsrGraph& graph, NodeId budget,
                                 std::uint64_t seed);

/// Subgraph induced by a budget-sized random node sample.
std::pair<CsrGraph, NodeIdMap> sample_subgraph(const CsrGraph& graph,
                                               NodeId budget,
                                               std::uint64_t seed);

/// Dense symmetric matrix of pairwise shared-neighbor counts within a
/// subgraph; the diagonal is 0.
struct SharedNeighborMatrix {
  NodeId dim{0};
  std::vector<std::uint32_t> counts;  // row-major, dim * dim

  std::uint32_t at(NodeId v, NodeId u) const {
    return counts[static_cast<std::size_t>(v) * dim + u];
  }
};

/// Exact pairwise sorted-list intersection counts. Refuses subgraphs above
/// `cap` nodes (the dense matrix would not fit); raise the cap explicitly
/// for bigger ones.
SharedNeighborMatrix shared_neighbors(const CsrGraph& subgraph,
                                      NodeId cap = kDefaultSharedNeighborCap);

struct Region {
  NodeId row{0};
  NodeId col{0};
  std::uint64_t sum{0};
};

/// Sliding-window sums over the shared-neighbor matrix in node-index order,
/// sorted by sum descending (ties by row, then col). max_regions = 0 keeps
/// every window position.
std::vector<Region> region_density(const SharedNeighborMatrix& matrix,
                                   NodeId window = 3,
                                   std::size_t max_regions = 0);

/// Average local clustering coefficient: mean over all nodes of
/// 2*triangles(v) / (deg(v)*(deg(v)-1)), with degree-<2 nodes contributing 0.
double clustering_coefficient(const CsrGraph& graph);

/// Number of triangles, each unordered triple counted once.
std::uint64_t closed_triads(const CsrGraph& graph);

struct SubgraphStats {
  double mean_clustering{0.0};
  double mean_closed_triads{0.0};
  std::uint64_t num_samples{0};
  NodeId budget{0};
};

/// Mean clustering coefficient and closed-triad count over num_samples
/// independent node-sampled subgraphs. Per-sample seeds derive from the
/// master seed, so any thread count gives the same result.
SubgraphStats batch_stats(const CsrGraph& graph, NodeId budget,
                          std::uint64_t num_samples, std::uint64_t seed,
                          unsigned threads = 1);

}  // namespace dropreef
