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

#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dropreef/types.hpp"

namespace dropreef {

/// Undirected simple graph in compressed sparse row form.
///
/// Each undirected edge {u, v} occupies two directed slots: v appears in
/// u's neighbor list and u in v's. Neighbor lists are sorted ascending and
/// deduplicated; self-loops are never stored. The structure is immutable
/// after construction and safe for concurrent reads.
struct CsrGraph {
  NodeId num_nodes{0};
  std::vector<EdgeIndex> offsets;  // num_nodes + 1, cumulative neighbor counts
  std::vector<NodeId> targets;     // concatenated sorted neighbor lists

  NodeId degree(NodeId v) const {
    check_node(v);
    return static_cast<NodeId>(offsets[v + 1] - offsets[v]);
  }

  std::span<const NodeId> neighbors(NodeId v) const {
    check_node(v);
    return {targets.data() + offsets[v],
            static_cast<std::size_t>(offsets[v + 1] - offsets[v])};
  }

  EdgeIndex num_directed_slots() const { return targets.size(); }

  std::uint64_t num_undirected_edges() const { return targets.size() / 2; }

  /// Index into `targets` of the directed slot v -> u, if the edge exists.
  std::optional<EdgeIndex> slot(NodeId v, NodeId u) const;

  bool has_edge(NodeId v, NodeId u) const { return slot(v, u).has_value(); }

  /// Full invariant scan: offsets consistency, target range, sortedness,
  /// no self-loops, symmetry. Throws InternalError on the first violation.
  void validate() const;

  void check_node(NodeId v) const {
    if (v >= num_nodes) {
      throw InputError("node id " + std::to_string(v) + " out of range [0, " +
                       std::to_string(num_nodes) + ")");
    }
  }
};

/// Bijection between retained original ids and a contiguous new id range.
struct NodeIdMap {
  std::vector<NodeId> new_of_old;  // old num_nodes entries; kInvalidNode if dropped
  std::vector<NodeId> old_of_new;  // new num_nodes entries

  static NodeIdMap identity(NodeId num_nodes);
  bool retained(NodeId old_id) const { return new_of_old[old_id] != kInvalidNode; }
};

/// Builds the CSR form from raw id pairs. Each input pair contributes both
/// directions; self-loops are discarded and duplicate edges collapse to one
/// undirected edge. Ids must be < num_nodes (InputError names the pair).
CsrGraph build_csr(std::span<const std::pair<NodeId, NodeId>> edges,
                   NodeId num_nodes);

inline CsrGraph build_csr(std::initializer_list<std::pair<NodeId, NodeId>> edges,
                          NodeId num_nodes) {
  return build_csr(
      std::span<const std::pair<NodeId, NodeId>>(edges.begin(), edges.size()),
      num_nodes);
}

/// Removes the given nodes and every edge incident to them; retained nodes
/// are reindexed contiguously in ascending original-id order.
std::pair<CsrGraph, NodeIdMap> remove_nodes(const CsrGraph& graph,
                                            std::span<const NodeId> drop);

/// Subgraph induced by `nodes`: exactly the edges with both endpoints kept.
std::pair<CsrGraph, NodeIdMap> induced_subgraph(const CsrGraph& graph,
                                                std::span<const NodeId> nodes);

}  // namespace dropreef
