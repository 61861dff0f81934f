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
#include "dropreef/csr_graph.hpp"

#include <algorithm>
#include <cstddef>

namespace dropreef {

std::optional<EdgeIndex> CsrGraph::slot(NodeId v, NodeId u) const {
  check_node(v);
  check_node(u);
  auto row = neighbors(v);
  auto it = std::lower_bound(row.begin(), row.end(), u);
  if (it == row.end() || *it != u) {
    return std::nullopt;
  }
  return offsets[v] + static_cast<EdgeIndex>(it - row.begin());
}

void CsrGraph::validate() const {
  if (offsets.size() != static_cast<std::size_t>(num_nodes) + 1) {
    throw InternalError("csr: offsets length != num_nodes + 1");
  }
  if (offsets.front() != 0 || offsets.back() != targets.size()) {
    throw InternalError("csr: offsets endpoints inconsistent with targets");
  }
  for (NodeId v = 0; v < num_nodes; ++v) {
    if (offsets[v + 1] < offsets[v]) {
      throw InternalError("csr: offsets decrease at node " + std::to_string(v));
    }
    NodeId prev = kInvalidNode;
    for (EdgeIndex i = offsets[v]; i < offsets[v + 1]; ++i) {
      NodeId u = targets[i];
      if (u >= num_nodes) {
        throw InternalError("csr: target out of range in row " + std::to_string(v));
      }
      if (u == v) {
        throw InternalError("csr: self-loop at node " + std::to_string(v));
      }
      if (prev != kInvalidNode && u <= prev) {
        throw InternalError("csr: row " + std::to_string(v) +
                            " not strictly ascending");
      }
      prev = u;
    }
  }
  // Symmetry: every directed slot has its mirror.
  for (NodeId v = 0; v < num_nodes; ++v) {
    for (EdgeIndex i = offsets[v]; i < offsets[v + 1]; ++i) {
      NodeId u = targets[i];
      auto row = std::span<const NodeId>(targets.data() + offsets[u],
                                         offsets[u + 1] - offsets[u]);
      if (!std::binary_search(row.begin(), row.end(), v)) {
        throw InternalError("csr: edge (" + std::to_string(v) + ", " +
                            std::to_string(u) + ") lacks its mirror");
      }
    }
  }
}

NodeIdMap NodeIdMap::identity(NodeId num_nodes) {
  NodeIdMap map;
  map.new_of_old.resize(num_nodes);
  map.old_of_new.resize(num_nodes);
  for (NodeId v = 0; v < num_nodes; ++v) {
    map.new_of_old[v] = v;
    map.old_of_new[v] = v;
  }
  return map;
}

CsrGraph build_csr(std::span<const std::pair<NodeId, NodeId>> edges,
                   NodeId num_nodes) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [u, v] = edges[i];
    if (u >= num_nodes || v >= num_nodes) {
      throw InputError("edge pair #" + std::to_string(i) + " (" +
                       std::to_string(u) + ", " + std::to_string(v) +
                       "): id out of range [0, " + std::to_string(num_nodes) +
                       ")");
    }
  }

  CsrGraph g;
  g.num_nodes = num_nodes;
  g.offsets.assign(static_cast<std::size_t>(num_nodes) + 1, 0);

  // Degree count over both directions, self-loops skipped.
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    ++g.offsets[u + 1];
    ++g.offsets[v + 1];
  }
  for (NodeId v = 0; v < num_nodes; ++v) {
    g.offsets[v + 1] += g.offsets[v];
  }

  g.targets.resize(g.offsets.back());
  std::vector<EdgeIndex> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    g.targets[cursor[u]++] = v;
    g.targets[cursor[v]++] = u;
  }

  // Sort rows and collapse duplicates, then compact.
  std::vector<EdgeIndex> new_offsets(static_cast<std::size_t>(num_nodes) + 1, 0);
  EdgeIndex write = 0;
  for (NodeId v = 0; v < num_nodes; ++v) {
    EdgeIndex begin = g.offsets[v];
    EdgeIndex end = g.offsets[v + 1];
    std::sort(g.targets.begin() + begin, g.targets.begin() + end);
    EdgeIndex row_start = write;
    for (EdgeIndex i = begin; i < end; ++i) {
      if (write == row_start || g.targets[write - 1] != g.targets[i]) {
        g.targets[write++] = g.targets[i];
      }
    }
    new_offsets[v + 1] = write;
  }
  g.targets.resize(write);
  g.offsets = std::move(new_offsets);
  return g;
}

namespace {

// Shared tail of remove_nodes / induced_subgraph: rebuild rows for the
// retained nodes, remapping targets through `map`. Monotone remapping keeps
// rows sorted.
std::pair<CsrGraph, NodeIdMap> filter_graph(const CsrGraph& graph,
                                            const std::vector<bool>& keep) {
  NodeIdMap map;
  map.new_of_old.assign(graph.num_nodes, kInvalidNode);
  for (NodeId v = 0; v < graph.num_nodes; ++v) {
    if (keep[v]) {
      map.new_of_old[v] = static_cast<NodeId>(map.old_of_new.size());
      map.old_of_new.push_back(v);
    }
  }

  CsrGraph out;
  out.num_nodes = static_cast<NodeId>(map.old_of_new.size());
  out.offsets.assign(static_cast<std::size_t>(out.num_nodes) + 1, 0);
  for (NodeId nv = 0; nv < out.num_nodes; ++nv) {
    EdgeIndex count = 0;
    for (NodeId u : graph.neighbors(map.old_of_new[nv])) {
      if (keep[u]) ++count;
    }
    out.offsets[nv + 1] = out.offsets[nv] + count;
  }
  out.targets.resize(out.offsets.back());
  for (NodeId nv = 0; nv < out.num_nodes; ++nv) {
    EdgeIndex w = out.offsets[nv];
    for (NodeId u : graph.neighbors(map.old_of_new[nv])) {
      if (keep[u]) out.targets[w++] = map.new_of_old[u];
    }
  }
  return {std::move(out), std::move(map)};
}

}  // namespace

std::pair<CsrGraph, NodeIdMap> remove_nodes(const CsrGraph& graph,
                                            std::span<const NodeId> drop) {
  std::vector<bool> keep(graph.num_nodes, true);
  for (NodeId v : drop) {
    graph.check_node(v);
    keep[v] = false;
  }
  return filter_graph(graph, keep);
}

std::pair<CsrGraph, NodeIdMap> induced_subgraph(const CsrGraph& graph,
                                                std::span<const NodeId> nodes) {
  std::vector<bool> keep(graph.num_nodes, false);
  for (NodeId v : nodes) {
    graph.check_node(v);
    keep[v] = true;
  }
  return filter_graph(graph, keep);
}

}  // namespace dropreef
