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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dropreef/csr_graph.hpp"
#include "dropreef/drop.hpp"
#include "dropreef/edge_probs.hpp"
#include "dropreef/labels.hpp"
#include "dropreef/metrics.hpp"
#include "dropreef/sampling.hpp"
#include "dropreef/types.hpp"

namespace dropreef {

/// Writes bytes through a sibling temp file and renames it into place, so a
/// crash never leaves a half-written output behind.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view bytes);

/// Whole file as bytes; InputError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// FNV-1a 64-bit content digest, reported as 16 hex digits in manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::uint64_t digest);

/// Parsed edge-list text: `u v` per line, `#` comments and blank lines
/// skipped. When num_nodes is given, any id >= num_nodes is an InputError
/// naming the offending line; otherwise min_node_count reports 1 + max id.
struct EdgeListFile {
  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId min_node_count{0};
};

EdgeListFile read_edge_list(const std::filesystem::path& path,
                            std::optional<NodeId> num_nodes = std::nullopt);

/// Canonical edge-list text: one `u v` line per undirected edge, u < v,
/// ordered by (u, v). Re-ingesting the output rebuilds an equal graph.
std::string format_edge_list(const CsrGraph& graph);

/// Binary CSR codec. Layout (all integers little-endian):
///   bytes 0..3   magic "GRF1"
///   bytes 4..11  num_nodes  (u64)
///   bytes 12..19 targets length (u64)
///   then (num_nodes + 1) u64 offsets, then that many u32 targets.
std::string format_graph_binary(const CsrGraph& graph);
CsrGraph read_graph_binary(const std::filesystem::path& path);

/// Label text: one line per node listing its class indices; an empty line
/// is a zero row. Class count is inferred as 1 + the largest index.
LabelMatrix read_labels(const std::filesystem::path& path,
                        std::optional<NodeId> expected_nodes = std::nullopt);
std::string format_labels(const LabelMatrix& labels);

/// Split text: one token per line from {train, val, test, drop}; `drop`
/// appears only in outputs of the retain-edges drop mode.
SplitMask read_split(const std::filesystem::path& path,
                     std::optional<NodeId> expected_nodes = std::nullopt);
std::string format_split(const SplitMask& mask);

/// Probability text: one `u v p` line per undirected edge, u < v.
std::string format_probs(const CsrGraph& graph,
                         const EdgeProbabilities& probs);

/// WNH snapshot: `node_id<TAB>degree<TAB>wnh` for every computed node,
/// ascending by id, preceded by a `#` header line.
std::string format_wnh_snapshot(const NodeMetrics& metrics);
void write_wnh_snapshot(const std::filesystem::path& path,
                        const NodeMetrics& metrics);

/// Node id remapping: `old_id<TAB>new_id` per retained node, ascending.
std::string format_node_map(const NodeIdMap& map);

/// One node id per line, in the order given.
std::string format_node_ids(std::span<const NodeId> ids);

std::string format_drop_report_json(const DropReport& report,
                                    std::string_view dropped_ids_path);

std::string format_quantiles_tsv(const QuantileReport& report);
std::string format_quantiles_json(const QuantileReport& report);

std::string format_overlap_tsv(const OverlapReport& report);
std::string format_overlap_json(const OverlapReport& report);

/// Dense: dim rows of dim tab-separated counts. Sparse: `u v count` for
/// every unordered pair with a nonzero count, ordered by (u, v).
std::string format_shared_neighbors_dense(const SharedNeighborMatrix& matrix);
std::string format_shared_neighbors_sparse(const SharedNeighborMatrix& matrix);

std::string format_regions_tsv(std::span<const Region> regions);
std::string format_regions_json(std::span<const Region> regions);

std::string format_stats_json(const SubgraphStats& stats);

}  // namespace dropreef
