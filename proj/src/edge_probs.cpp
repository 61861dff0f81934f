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
#include "dropreef/edge_probs.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <span>

#include "dropreef/parallel.hpp"
#include "text_util.hpp"

namespace dropreef {

void EdgeProbabilities::validate(const CsrGraph& graph) const {
  if (values.size() != graph.targets.size()) {
    throw InternalError("probabilities length " + std::to_string(values.size()) +
                        " does not match graph slot count " +
                        std::to_string(graph.targets.size()));
  }
  for (double p : values) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InternalError("probability " + detail::format_double(p) +
                          " outside [0, 1]");
    }
  }
  for (NodeId v = 0; v < graph.num_nodes; ++v) {
    for (EdgeIndex i = graph.offsets[v]; i < graph.offsets[v + 1]; ++i) {
      NodeId u = graph.targets[i];
      if (u < v) continue;  // each undirected edge checked once
      EdgeIndex mirror = *graph.slot(u, v);
      if (values[i] != values[mirror]) {
        throw InternalError("asymmetric probability on edge (" +
                            std::to_string(v) + ", " + std::to_string(u) + ")");
      }
    }
  }
}

EdgeProbabilities EdgeProbabilities::remap(const CsrGraph& old_graph,
                                           const CsrGraph& new_graph,
                                           const NodeIdMap& map) const {
  EdgeProbabilities out;
  out.values.resize(new_graph.targets.size());
  for (NodeId nv = 0; nv < new_graph.num_nodes; ++nv) {
    NodeId ov = map.old_of_new[nv];
    for (EdgeIndex i = new_graph.offsets[nv]; i < new_graph.offsets[nv + 1]; ++i) {
      NodeId ou = map.old_of_new[new_graph.targets[i]];
      auto s = old_graph.slot(ov, ou);
      if (!s) {
        throw InternalError("remap: edge (" + std::to_string(ov) + ", " +
                            std::to_string(ou) + ") missing in source graph");
      }
      out.values[i] = values[*s];
    }
  }
  return out;
}

EdgeProbabilities uniform_probs(const CsrGraph& graph) {
  return EdgeProbabilities{std::vector<double>(graph.targets.size(), 1.0)};
}

EdgeProbabilities load_probs(const std::filesystem::path& path,
                             const CsrGraph& graph) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open probability file: " + path.string());
  }
  EdgeProbabilities probs{std::vector<double>(graph.targets.size(), 1.0)};
  std::vector<std::uint8_t> seen(graph.targets.size(), 0);

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment(line)) continue;
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected 'u v p', got " +
                       std::to_string(tokens.size()) + " tokens");
    }
    std::uint64_t u64 = detail::parse_u64(tokens[0], "node id", line_no);
    std::uint64_t v64 = detail::parse_u64(tokens[1], "node id", line_no);
    double p = detail::parse_double(tokens[2], "probability", line_no);
    if (u64 >= graph.num_nodes || v64 >= graph.num_nodes) {
      throw InputError("line " + std::to_string(line_no) + ": record (" +
                       std::string(tokens[0]) + ", " + std::string(tokens[1]) +
                       ") names a node outside [0, " +
                       std::to_string(graph.num_nodes) + ")");
    }
    auto u = static_cast<NodeId>(u64);
    auto v = static_cast<NodeId>(v64);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InputError("line " + std::to_string(line_no) + ": probability " +
                       std::string(tokens[2]) + " outside [0, 1]");
    }
    auto fwd = graph.slot(u, v);
    if (!fwd) {
      throw InputError("line " + std::to_string(line_no) + ": record (" +
                       std::string(tokens[0]) + ", " + std::string(tokens[1]) +
                       ") is not an edge of the graph");
    }
    EdgeIndex rev = *graph.slot(v, u);
    if (seen[*fwd] && probs.values[*fwd] != p) {
      throw InputError("line " + std::to_string(line_no) +
                       ": duplicate record for edge (" + std::string(tokens[0]) +
                       ", " + std::string(tokens[1]) + ") with conflicting p (" +
                       detail::format_double(probs.values[*fwd]) + " vs " +
                       std::string(tokens[2]) + ")");
    }
    probs.values[*fwd] = p;
    probs.values[rev] = p;
    seen[*fwd] = 1;
    seen[rev] = 1;
  }
  return probs;
}

namespace {

std::uint64_t intersection_size(std::span<const NodeId> a,
                                std::span<const NodeId> b) {
  std::uint64_t n = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// Applies f(v, u, slot_vu, slot_uv) to every undirected edge, node-parallel
// over the smaller endpoint. Each edge is visited by exactly one worker.
template <typename F>
void for_each_edge(const CsrGraph& graph, unsigned threads, F&& f) {
  parallel_for(0, graph.num_nodes, threads, [&](std::uint64_t v64) {
    auto v = static_cast<NodeId>(v64);
    for (EdgeIndex i = graph.offsets[v]; i < graph.offsets[v + 1]; ++i) {
      NodeId u = graph.targets[i];
      if (u < v) continue;
      EdgeIndex mirror = *graph.slot(u, v);
      f(v, u, i, mirror);
    }
  });
}

}  // namespace

EdgeProbabilities heuristic_probs(const CsrGraph& graph, ProbMethod method,
                                  unsigned threads) {
  EdgeProbabilities probs{std::vector<double>(graph.targets.size(), 0.0)};

  if (method == ProbMethod::kJaccard) {
    for_each_edge(graph, threads, [&](NodeId v, NodeId u, EdgeIndex s, EdgeIndex m) {
      std::uint64_t inter = intersection_size(graph.neighbors(v), graph.neighbors(u));
      // Endpoints are excluded from the union: v in N(u) and u in N(v)
      // never count toward it.
      std::uint64_t uni = graph.degree(v) + graph.degree(u) - inter - 2;
      double p = uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
      probs.values[s] = p;
      probs.values[m] = p;
    });
    return probs;
  }

  // common-neighbors: raw counts first, then global max normalization.
  std::atomic<std::uint64_t> max_count{0};
  for_each_edge(graph, threads, [&](NodeId v, NodeId u, EdgeIndex s, EdgeIndex m) {
    std::uint64_t inter = intersection_size(graph.neighbors(v), graph.neighbors(u));
    probs.values[s] = static_cast<double>(inter);
    probs.values[m] = static_cast<double>(inter);
    std::uint64_t seen = max_count.load(std::memory_order_relaxed);
    while (inter > seen &&
           !max_count.compare_exchange_weak(seen, inter, std::memory_order_relaxed)) {
    }
  });
  const std::uint64_t max = max_count.load();
  if (max > 0) {
    const double scale = static_cast<double>(max);
    parallel_for(0, probs.values.size(), threads,
                 [&](std::uint64_t i) { probs.values[i] /= scale; });
  }
  return probs;
}

}  // namespace dropreef
