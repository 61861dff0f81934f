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
#include "dropreef/io.hpp"

#include <cstring>
#include <fstream>

#include <json.hpp>

#include "text_util.hpp"

namespace dropreef {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    const auto line = nl == std::string_view::npos
                          ? text.substr(start)
                          : text.substr(start, nl - start);
    f(line, ++line_no);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

NodeId parse_node_id(std::string_view tok, const std::string& what,
                     std::size_t line_no, std::optional<NodeId> bound) {
  const auto raw = detail::parse_u64(tok, what, line_no);
  if (bound) {
    if (raw >= *bound) {
      throw InputError("line " + std::to_string(line_no) + ": " + what + " " +
                       std::to_string(raw) + " out of range; node count is " +
                       std::to_string(*bound));
    }
  } else if (raw >= kInvalidNode) {
    throw InputError("line " + std::to_string(line_no) + ": " + what + " " +
                     std::to_string(raw) + " exceeds the supported id range");
  }
  return static_cast<NodeId>(raw);
}

[[noreturn]] void rethrow_with_path(const std::filesystem::path& path,
                                    const InputError& e) {
  throw InputError(path.string() + ": " + e.what());
}

void append_u64_le(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
}

void append_u32_le(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
}

std::uint64_t load_u64_le(const char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i]))
         << (8 * i);
  }
  return v;
}

std::uint32_t load_u32_le(const char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(p[i]))
         << (8 * i);
  }
  return v;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view bytes) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw InputError("cannot open '" + tmp.string() + "' for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      throw InputError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw InputError("cannot rename '" + tmp.string() + "' to '" +
                     path.string() + "': " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path.string() + "'");
  }
  std::string bytes;
  in.seekg(0, std::ios::end);
  const auto size = in.tellg();
  if (size > 0) {
    bytes.resize(static_cast<std::size_t>(size));
    in.seekg(0, std::ios::beg);
    in.read(bytes.data(), size);
    if (!in) {
      throw InputError("failed reading '" + path.string() + "'");
    }
  }
  return bytes;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[digest & 0xf];
    digest >>= 4;
  }
  return out;
}

EdgeListFile read_edge_list(const std::filesystem::path& path,
                            std::optional<NodeId> num_nodes) {
  EdgeListFile out;
  const auto text = read_file(path);
  try {
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
      if (detail::is_comment(line)) return;
      const auto toks = detail::split_ws(line);
      if (toks.empty()) return;
      if (toks.size() != 2) {
        throw InputError("line " + std::to_string(line_no) +
                         ": expected 'u v', got " +
                         std::to_string(toks.size()) + " tokens");
      }
      const auto u = parse_node_id(toks[0], "node id", line_no, num_nodes);
      const auto v = parse_node_id(toks[1], "node id", line_no, num_nodes);
      out.edges.emplace_back(u, v);
      const auto hi = std::max(u, v);
      if (hi + 1 > out.min_node_count) out.min_node_count = hi + 1;
    });
  } catch (const InputError& e) {
    rethrow_with_path(path, e);
  }
  if (num_nodes) out.min_node_count = *num_nodes;
  return out;
}

std::string format_edge_list(const CsrGraph& graph) {
  std::string out;
  out.reserve(graph.num_undirected_edges() * 16);
  for (NodeId v = 0; v < graph.num_nodes; ++v) {
    for (const NodeId u : graph.neighbors(v)) {
      if (u < v) continue;
      out += std::to_string(v);
      out += ' ';
      out += std::to_string(u);
      out += '\n';
    }
  }
  return out;
}

std::string format_graph_binary(const CsrGraph& graph) {
  std::string out;
  out.reserve(20 + graph.offsets.size() * 8 + graph.targets.size() * 4);
  out += "GRF1";
  append_u64_le(out, graph.num_nodes);
  append_u64_le(out, graph.targets.size());
  for (const EdgeIndex off : graph.offsets) append_u64_le(out, off);
  for (const NodeId t : graph.targets) {
    if (t > 0xffffffffULL) {
      throw InputError("node id " + std::to_string(t) +
                       " does not fit the 32-bit binary graph format");
    }
    append_u32_le(out, static_cast<std::uint32_t>(t));
  }
  return out;
}

CsrGraph read_graph_binary(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  if (bytes.size() < 20 || std::memcmp(bytes.data(), "GRF1", 4) != 0) {
    throw InputError("'" + path.string() + "' is not a GRF1 graph file");
  }
  const auto num_nodes = load_u64_le(bytes.data() + 4);
  const auto num_targets = load_u64_le(bytes.data() + 12);
  if (num_nodes >= kInvalidNode) {
    throw InputError("'" + path.string() + "': node count " +
                     std::to_string(num_nodes) +
                     " exceeds the supported id range");
  }
  const auto expected = 20 + (num_nodes + 1) * 8 + num_targets * 4;
  if (bytes.size() != expected) {
    throw InputError("'" + path.string() + "': expected " +
                     std::to_string(expected) + " bytes, found " +
                     std::to_string(bytes.size()));
  }
  CsrGraph graph;
  graph.num_nodes = static_cast<NodeId>(num_nodes);
  graph.offsets.resize(num_nodes + 1);
  graph.targets.resize(num_targets);
  const char* p = bytes.data() + 20;
  for (auto& off : graph.offsets) {
    off = load_u64_le(p);
    p += 8;
  }
  for (auto& t : graph.targets) {
    t = load_u32_le(p);
    p += 4;
  }
  try {
    graph.validate();
  } catch (const InternalError& e) {
    throw InputError("'" + path.string() + "': " + e.what());
  }
  return graph;
}

LabelMatrix read_labels(const std::filesystem::path& path,
                        std::optional<NodeId> expected_nodes) {
  const auto text = read_file(path);
  std::vector<std::vector<std::uint32_t>> rows;
  std::uint32_t num_classes = 0;
  try {
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
      auto& row = rows.emplace_back();
      for (const auto tok : detail::split_ws(line)) {
        const auto cls = detail::parse_u64(tok, "class index", line_no);
        if (cls >= 0xffffffffULL) {
          throw InputError("line " + std::to_string(line_no) +
                           ": class index " + std::to_string(cls) +
                           " exceeds the supported range");
        }
        row.push_back(static_cast<std::uint32_t>(cls));
        num_classes = std::max(num_classes,
                               static_cast<std::uint32_t>(cls) + 1);
      }
    });
    if (expected_nodes && rows.size() != *expected_nodes) {
      throw InputError("has " + std::to_string(rows.size()) +
                       " node lines, expected " +
                       std::to_string(*expected_nodes));
    }
  } catch (const InputError& e) {
    rethrow_with_path(path, e);
  }
  LabelMatrix labels(static_cast<NodeId>(rows.size()), num_classes);
  for (NodeId v = 0; v < labels.num_nodes(); ++v) {
    for (const auto cls : rows[v]) labels.set(v, cls);
  }
  return labels;
}

std::string format_labels(const LabelMatrix& labels) {
  std::string out;
  for (NodeId v = 0; v < labels.num_nodes(); ++v) {
    bool first = true;
    for (const auto cls : labels.classes_of(v)) {
      if (!first) out += ' ';
      out += std::to_string(cls);
      first = false;
    }
    out += '\n';
  }
  return out;
}

SplitMask read_split(const std::filesystem::path& path,
                     std::optional<NodeId> expected_nodes) {
  const auto text = read_file(path);
  SplitMask mask;
  try {
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
      const auto toks = detail::split_ws(line);
      if (toks.size() != 1) {
        throw InputError("line " + std::to_string(line_no) +
                         ": expected one split role per line");
      }
      Role role;
      if (toks[0] == "train") {
        role = Role::kTrain;
      } else if (toks[0] == "val") {
        role = Role::kVal;
      } else if (toks[0] == "test") {
        role = Role::kTest;
      } else if (toks[0] == "drop") {
        role = Role::kDropped;
      } else {
        throw InputError("line " + std::to_string(line_no) +
                         ": unknown split role '" + std::string(toks[0]) +
                         "'");
      }
      mask.roles.push_back(role);
    });
    if (expected_nodes && mask.roles.size() != *expected_nodes) {
      throw InputError("has " + std::to_string(mask.roles.size()) +
                       " node lines, expected " +
                       std::to_string(*expected_nodes));
    }
  } catch (const InputError& e) {
    rethrow_with_path(path, e);
  }
  return mask;
}

std::string format_split(const SplitMask& mask) {
  std::string out;
  for (const Role role : mask.roles) {
    switch (role) {
      case Role::kTrain: out += "train\n"; break;
      case Role::kVal: out += "val\n"; break;
      case Role::kTest: out += "test\n"; break;
      case Role::kDropped: out += "drop\n"; break;
    }
  }
  return out;
}

std::string format_probs(const CsrGraph& graph,
                         const EdgeProbabilities& probs) {
  std::string out;
  out.reserve(graph.num_undirected_edges() * 24);
  for (NodeId v = 0; v < graph.num_nodes; ++v) {
    const auto row = graph.neighbors(v);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] < v) continue;
      out += std::to_string(v);
      out += ' ';
      out += std::to_string(row[i]);
      out += ' ';
      out += detail::format_double(probs.values[graph.offsets[v] + i]);
      out += '\n';
    }
  }
  return out;
}

std::string format_wnh_snapshot(const NodeMetrics& metrics) {
  std::string out = "# node_id\tdegree\twnh\n";
  for (const NodeId v : metrics.nodes) {
    out += std::to_string(v);
    out += '\t';
    out += std::to_string(metrics.degree[v]);
    out += '\t';
    out += detail::format_double(metrics.wnh[v]);
    out += '\n';
  }
  return out;
}

void write_wnh_snapshot(const std::filesystem::path& path,
                        const NodeMetrics& metrics) {
  write_file_atomic(path, format_wnh_snapshot(metrics));
}

std::string format_node_map(const NodeIdMap& map) {
  std::string out;
  for (NodeId old_id = 0; old_id < map.new_of_old.size(); ++old_id) {
    if (!map.retained(old_id)) continue;
    out += std::to_string(old_id);
    out += '\t';
    out += std::to_string(map.new_of_old[old_id]);
    out += '\n';
  }
  return out;
}

std::string format_node_ids(std::span<const NodeId> ids) {
  std::string out;
  for (const NodeId v : ids) {
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string format_drop_report_json(const DropReport& report,
                                    std::string_view dropped_ids_path) {
  ordered_json j;
  j["dropped_count"] = report.dropped.size();
  j["train_count"] = report.train_count;
  j["drop_node_ratio"] = report.drop_node_ratio;
  j["drop_edge_ratio"] = report.drop_edge_ratio;
  j["removed_edge_count"] = report.removed_edge_count;
  j["train_incident_edge_count"] = report.train_incident_edge_count;
  j["th_wnh"] = report.th_wnh;
  j["th_deg"] = report.th_deg;
  j["dropped_ids"] = std::string(dropped_ids_path);
  j["wnh_snapshot"] = report.wnh_snapshot_path;
  return dump(j);
}

std::string format_quantiles_tsv(const QuantileReport& report) {
  std::string out =
      "# lo_pct\thi_pct\tnode_count\tdegree_sum\tavg_degree\tneighbor_share\n";
  for (const auto& b : report.buckets) {
    out += detail::format_double(b.lo_pct);
    out += '\t';
    out += detail::format_double(b.hi_pct);
    out += '\t';
    out += std::to_string(b.node_count);
    out += '\t';
    out += std::to_string(b.degree_sum);
    out += '\t';
    out += detail::format_double(b.avg_degree);
    out += '\t';
    out += detail::format_double(b.neighbor_share);
    out += '\n';
  }
  return out;
}

std::string format_quantiles_json(const QuantileReport& report) {
  ordered_json j;
  j["top_fraction"] = report.top_fraction;
  j["total_degree_mass"] = report.total_degree_mass;
  j["buckets"] = ordered_json::array();
  for (const auto& b : report.buckets) {
    ordered_json jb;
    jb["lo_pct"] = b.lo_pct;
    jb["hi_pct"] = b.hi_pct;
    jb["node_count"] = b.node_count;
    jb["degree_sum"] = b.degree_sum;
    jb["avg_degree"] = b.avg_degree;
    jb["neighbor_share"] = b.neighbor_share;
    j["buckets"].push_back(std::move(jb));
  }
  return dump(j);
}

std::string format_overlap_tsv(const OverlapReport& report) {
  std::string out = "# lo_pct\thi_pct\toverlap_count\tfraction\n";
  for (const auto& b : report.buckets) {
    out += detail::format_double(b.lo_pct);
    out += '\t';
    out += detail::format_double(b.hi_pct);
    out += '\t';
    out += std::to_string(b.overlap_count);
    out += '\t';
    out += detail::format_double(b.fraction);
    out += '\n';
  }
  return out;
}

std::string format_overlap_json(const OverlapReport& report) {
  ordered_json j;
  j["wnh_top_fraction"] = report.wnh_top_fraction;
  j["degree_top_fraction"] = report.degree_top_fraction;
  j["wnh_top_count"] = report.wnh_top_count;
  j["buckets"] = ordered_json::array();
  for (const auto& b : report.buckets) {
    ordered_json jb;
    jb["lo_pct"] = b.lo_pct;
    jb["hi_pct"] = b.hi_pct;
    jb["overlap_count"] = b.overlap_count;
    jb["fraction"] = b.fraction;
    j["buckets"].push_back(std::move(jb));
  }
  return dump(j);
}

std::string format_shared_neighbors_dense(const SharedNeighborMatrix& matrix) {
  std::string out;
  for (NodeId v = 0; v < matrix.dim; ++v) {
    for (NodeId u = 0; u < matrix.dim; ++u) {
      if (u > 0) out += '\t';
      out += std::to_string(matrix.at(v, u));
    }
    out += '\n';
  }
  return out;
}

std::string format_shared_neighbors_sparse(const SharedNeighborMatrix& matrix) {
  std::string out = "# u\tv\tcount\n";
  for (NodeId v = 0; v < matrix.dim; ++v) {
    for (NodeId u = v + 1; u < matrix.dim; ++u) {
      const auto count = matrix.at(v, u);
      if (count == 0) continue;
      out += std::to_string(v);
      out += '\t';
      out += std::to_string(u);
      out += '\t';
      out += std::to_string(count);
      out += '\n';
    }
  }
  return out;
}

std::string format_regions_tsv(std::span<const Region> regions) {
  std::string out = "# row\tcol\tsum\n";
  for (const auto& r : regions) {
    out += std::to_string(r.row);
    out += '\t';
    out += std::to_string(r.col);
    out += '\t';
    out += std::to_string(r.sum);
    out += '\n';
  }
  return out;
}

std::string format_regions_json(std::span<const Region> regions) {
  ordered_json j;
  j["count"] = regions.size();
  j["regions"] = ordered_json::array();
  for (const auto& r : regions) {
    ordered_json jr;
    jr["row"] = r.row;
    jr["col"] = r.col;
    jr["sum"] = r.sum;
    j["regions"].push_back(std::move(jr));
  }
  return dump(j);
}

std::string format_stats_json(const SubgraphStats& stats) {
  ordered_json j;
  j["budget"] = stats.budget;
  j["num_samples"] = stats.num_samples;
  j["mean_clustering"] = stats.mean_clustering;
  j["mean_closed_triads"] = stats.mean_closed_triads;
  return dump(j);
}

}  // namespace dropreef
