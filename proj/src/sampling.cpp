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
#include "dropreef/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "dropreef/parallel.hpp"
#include "dropreef/rng.hpp"

namespace dropreef {

std::vector<NodeId> sample_nodes(const CsrGraph& graph, NodeId budget,
                                 std::uint64_t seed) {
  if (budget > graph.num_nodes) {
    throw InputError("budget " + std::to_string(budget) +
                     " exceeds node count " + std::to_string(graph.num_nodes));
  }
  std::vector<NodeId> ids(graph.num_nodes);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  Rng rng(seed);
  for (NodeId i = 0; i < budget; ++i) {
    auto j = i + static_cast<NodeId>(rng.bounded(graph.num_nodes - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(budget);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::pair<CsrGraph, NodeIdMap> sample_subgraph(const CsrGraph& graph,
                                               NodeId budget,
                                               std::uint64_t seed) {
  auto nodes = sample_nodes(graph, budget, seed);
  return induced_subgraph(graph, nodes);
}

SharedNeighborMatrix shared_neighbors(const CsrGraph& subgraph, NodeId cap) {
  if (subgraph.num_nodes > cap) {
    throw ResourceError(
        "subgraph has " + std::to_string(subgraph.num_nodes) +
        " nodes, above the dense shared-neighbor cap of " + std::to_string(cap) +
        "; pass a larger --cap to allow the allocation");
  }
  SharedNeighborMatrix matrix;
  matrix.dim = subgraph.num_nodes;
  matrix.counts.assign(static_cast<std::size_t>(matrix.dim) * matrix.dim, 0);

  // n_vu = number of wedges v-w-u; enumerating neighbor pairs of every
  // center w counts each shared neighbor exactly once.
  for (NodeId w = 0; w < subgraph.num_nodes; ++w) {
    auto row = subgraph.neighbors(w);
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::size_t j = i + 1; j < row.size(); ++j) {
        ++matrix.counts[static_cast<std::size_t>(row[i]) * matrix.dim + row[j]];
        ++matrix.counts[static_cast<std::size_t>(row[j]) * matrix.dim + row[i]];
      }
    }
  }
  return matrix;
}

std::vector<Region> region_density(const SharedNeighborMatrix& matrix,
                                   NodeId window, std::size_t max_regions) {
  if (window < 1 || window > matrix.dim) {
    throw InputError("window must be in [1, matrix dimension]");
  }
  const NodeId positions = matrix.dim - window + 1;

  auto better = [](const Region& a, const Region& b) {
    if (a.sum != b.sum) return a.sum > b.sum;
    if (a.row != b.row) return a.row < b.row;
    return a.col < b.col;
  };

  std::vector<Region> regions;
  // Column sums over the current row band; slid down one row at a time.
  std::vector<std::uint64_t> band(matrix.dim, 0);
  for (NodeId r = 0; r < positions; ++r) {
    if (r == 0) {
      for (NodeId i = 0; i < window; ++i) {
        for (NodeId c = 0; c < matrix.dim; ++c) {
          band[c] += matrix.at(i, c);
        }
      }
    } else {
      for (NodeId c = 0; c < matrix.dim; ++c) {
        band[c] += matrix.at(r + window - 1, c);
        band[c] -= matrix.at(r - 1, c);
      }
    }
    std::uint64_t sum = 0;
    for (NodeId c = 0; c < window; ++c) sum += band[c];
    for (NodeId c = 0;; ++c) {
      Region region{r, c, sum};
      if (max_regions == 0) {
        regions.push_back(region);
      } else if (regions.size() < max_regions) {
        regions.push_back(region);
        std::push_heap(regions.begin(), regions.end(), better);
      } else if (better(region, regions.front())) {
        std::pop_heap(regions.begin(), regions.end(), better);
        regions.back() = region;
        std::push_heap(regions.begin(), regions.end(), better);
      }
      if (c + 1 >= positions) break;
      sum += band[c + window];
      sum -= band[c];
    }
  }
  std::sort(regions.begin(), regions.end(), better);
  return regions;
}

namespace {

// Per-node triangle membership counts. Every edge (v, u) contributes one
// increment to each common neighbor, so each triangle adds one to each of
// its three corners.
std::vector<std::uint64_t> triangle_counts(const CsrGraph& graph) {
  std::vector<std::uint64_t> tri(graph.num_nodes, 0);
  for (NodeId v = 0; v < graph.num_nodes; ++v) {
    auto nv = graph.neighbors(v);
    for (NodeId u : nv) {
      if (u < v) continue;
      auto nu = graph.neighbors(u);
      std::size_t i = 0, j = 0;
      while (i < nv.size() && j < nu.size()) {
        if (nv[i] < nu[j]) {
          ++i;
        } else if (nv[i] > nu[j]) {
          ++j;
        } else {
          ++tri[nv[i]];
          ++i;
          ++j;
        }
      }
    }
  }
  return tri;
}

}  // namespace

double clustering_coefficient(const CsrGraph& graph) {
  if (graph.num_nodes == 0) return 0.0;
  auto tri = triangle_counts(graph);
  double sum = 0.0;
  for (NodeId v = 0; v < graph.num_nodes; ++v) {
    const auto deg = static_cast<double>(graph.degree(v));
    if (deg < 2.0) continue;
    sum += 2.0 * static_cast<double>(tri[v]) / (deg * (deg - 1.0));
  }
  return sum / static_cast<double>(graph.num_nodes);
}

std::uint64_t closed_triads(const CsrGraph& graph) {
  auto tri = triangle_counts(graph);
  std::uint64_t total = 0;
  for (std::uint64_t t : tri) total += t;
  return total / 3;
}

SubgraphStats batch_stats(const CsrGraph& graph, NodeId budget,
                          std::uint64_t num_samples, std::uint64_t seed,
                          unsigned threads) {
  if (num_samples == 0) {
    throw InputError("num_samples must be >= 1");
  }
  if (budget > graph.num_nodes) {
    throw InputError("budget " + std::to_string(budget) +
                     " exceeds node count " + std::to_string(graph.num_nodes));
  }
  std::vector<double> cc(num_samples);
  std::vector<std::uint64_t> triads(num_samples);
  parallel_for(0, num_samples, threads, [&](std::uint64_t i) {
    auto [subgraph, map] = sample_subgraph(graph, budget, derive_seed(seed, i));
    cc[i] = clustering_coefficient(subgraph);
    triads[i] = closed_triads(subgraph);
  });

  SubgraphStats stats;
  stats.num_samples = num_samples;
  stats.budget = budget;
  double cc_sum = 0.0;
  double triad_sum = 0.0;
  for (std::uint64_t i = 0; i < num_samples; ++i) {
    cc_sum += cc[i];
    triad_sum += static_cast<double>(triads[i]);
  }
  stats.mean_clustering = cc_sum / static_cast<double>(num_samples);
  stats.mean_closed_triads = triad_sum / static_cast<double>(num_samples);
  return stats;
}

}  // namespace dropreef
