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
 *
 * Brute-force reference implementations the fast library code is checked
 * against. Everything here favors obviousness over speed: dense adjacency
 * matrices, explicit 0/1 label vectors, O(n^3) loops.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dropreef/csr_graph.hpp"
#include "dropreef/edge_probs.hpp"
#include "dropreef/labels.hpp"
#include "dropreef/rng.hpp"

namespace oracle {

using dropreef::NodeId;

/// Dense undirected adjacency matrix plus explicit label rows and a
/// symmetric probability map. The ground-truth picture of an instance.
struct Instance {
  NodeId num_nodes{0};
  std::vector<std::vector<std::uint8_t>> adj;     // n x n, symmetric, 0 diag
  std::vector<std::vector<std::uint8_t>> labels;  // n rows of length classes
  std::map<std::pair<NodeId, NodeId>, double> prob;  // key (min, max)
  std::vector<dropreef::Role> roles;

  double p(NodeId v, NodeId u) const {
    const auto it = prob.find({std::min(v, u), std::max(v, u)});
    return it == prob.end() ? 1.0 : it->second;
  }
};

inline double distance(const std::vector<std::uint8_t>& a,
                       const std::vector<std::uint8_t>& b) {
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    sq += d * d;
  }
  return std::sqrt(sq);
}

inline NodeId degree(const Instance& in, NodeId v) {
  NodeId d = 0;
  for (NodeId u = 0; u < in.num_nodes; ++u) d += in.adj[v][u];
  return d;
}

/// Eq.-style double loop: mean label distance over neighbors.
inline double hete(const Instance& in, NodeId v) {
  const NodeId d = degree(in, v);
  if (d == 0) return 0.0;
  double sum = 0.0;
  for (NodeId u = 0; u < in.num_nodes; ++u) {
    if (in.adj[v][u]) sum += distance(in.labels[v], in.labels[u]);
  }
  return sum / static_cast<double>(d);
}

/// Probability-weighted variant, same traversal order as hete.
inline double wnh(const Instance& in, NodeId v) {
  const NodeId d = degree(in, v);
  if (d == 0) return 0.0;
  double sum = 0.0;
  for (NodeId u = 0; u < in.num_nodes; ++u) {
    if (in.adj[v][u]) sum += in.p(v, u) * distance(in.labels[v], in.labels[u]);
  }
  return sum / static_cast<double>(d);
}

/// Brute filter over training nodes for the redundancy predicate.
inline std::vector<NodeId> detect_redundant(const Instance& in, double th_wnh,
                                            NodeId th_deg) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < in.num_nodes; ++v) {
    if (in.roles[v] != dropreef::Role::kTrain) continue;
    if (degree(in, v) >= th_deg && wnh(in, v) >= th_wnh) out.push_back(v);
  }
  return out;
}

/// Exhaustive triple enumeration.
inline std::uint64_t count_triangles(const Instance& in) {
  std::uint64_t count = 0;
  for (NodeId a = 0; a < in.num_nodes; ++a) {
    for (NodeId b = a + 1; b < in.num_nodes; ++b) {
      if (!in.adj[a][b]) continue;
      for (NodeId c = b + 1; c < in.num_nodes; ++c) {
        if (in.adj[a][c] && in.adj[b][c]) ++count;
      }
    }
  }
  return count;
}

/// Average local clustering coefficient straight from its definition.
inline double clustering(const Instance& in) {
  if (in.num_nodes == 0) return 0.0;
  double sum = 0.0;
  for (NodeId v = 0; v < in.num_nodes; ++v) {
    const NodeId d = degree(in, v);
    if (d < 2) continue;
    std::uint64_t closed = 0;
    for (NodeId a = 0; a < in.num_nodes; ++a) {
      if (!in.adj[v][a]) continue;
      for (NodeId b = a + 1; b < in.num_nodes; ++b) {
        if (in.adj[v][b] && in.adj[a][b]) ++closed;
      }
    }
    sum += 2.0 * static_cast<double>(closed) /
           (static_cast<double>(d) * (static_cast<double>(d) - 1.0));
  }
  return sum / static_cast<double>(in.num_nodes);
}

/// Double-loop set intersection of neighborhoods.
inline std::vector<std::vector<std::uint32_t>> shared_neighbors(
    const Instance& in) {
  std::vector<std::vector<std::uint32_t>> counts(
      in.num_nodes, std::vector<std::uint32_t>(in.num_nodes, 0));
  for (NodeId v = 0; v < in.num_nodes; ++v) {
    for (NodeId u = 0; u < in.num_nodes; ++u) {
      if (u == v) continue;
      std::uint32_t c = 0;
      for (NodeId w = 0; w < in.num_nodes; ++w) {
        if (in.adj[v][w] && in.adj[u][w]) ++c;
      }
      counts[v][u] = c;
    }
  }
  return counts;
}

// ------------------------------------------------------------- generators

struct InstanceOptions {
  NodeId max_nodes{50};
  std::uint32_t max_classes{8};
  bool single_class{false};     // force one-hot labels
  bool uniform_probs{false};    // force all probabilities to 1
};

/// Random G(n, p) instance with labels, probabilities, and split roles.
inline Instance random_instance(dropreef::Rng& rng,
                                const InstanceOptions& opt = {}) {
  Instance in;
  in.num_nodes = 1 + static_cast<NodeId>(rng.bounded(opt.max_nodes));
  in.adj.assign(in.num_nodes, std::vector<std::uint8_t>(in.num_nodes, 0));
  const double edge_p =
      static_cast<double>(1 + rng.bounded(6)) /
      static_cast<double>(std::max<NodeId>(in.num_nodes, 4));
  for (NodeId v = 0; v < in.num_nodes; ++v) {
    for (NodeId u = v + 1; u < in.num_nodes; ++u) {
      if (rng.next_double() < edge_p) {
        in.adj[v][u] = in.adj[u][v] = 1;
        double p = opt.uniform_probs ? 1.0 : rng.next_double();
        in.prob[{v, u}] = p;
      }
    }
  }
  const auto classes =
      1 + static_cast<std::uint32_t>(rng.bounded(opt.max_classes));
  const bool one_hot = opt.single_class || rng.bounded(2) == 0;
  in.labels.assign(in.num_nodes, std::vector<std::uint8_t>(classes, 0));
  for (NodeId v = 0; v < in.num_nodes; ++v) {
    if (one_hot) {
      in.labels[v][rng.bounded(classes)] = 1;
    } else {
      for (std::uint32_t c = 0; c < classes; ++c) {
        in.labels[v][c] = rng.next_double() < 0.3 ? 1 : 0;
      }
    }
  }
  in.roles.resize(in.num_nodes);
  for (NodeId v = 0; v < in.num_nodes; ++v) {
    const auto r = rng.bounded(4);
    in.roles[v] = r <= 1 ? dropreef::Role::kTrain
                         : (r == 2 ? dropreef::Role::kVal
                                   : dropreef::Role::kTest);
  }
  return in;
}

// --------------------------------------------- conversion to library types

inline dropreef::CsrGraph to_graph(const Instance& in) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 0; v < in.num_nodes; ++v) {
    for (NodeId u = v + 1; u < in.num_nodes; ++u) {
      if (in.adj[v][u]) edges.emplace_back(v, u);
    }
  }
  return dropreef::build_csr(edges, in.num_nodes);
}

inline dropreef::LabelMatrix to_labels(const Instance& in) {
  const auto classes =
      in.num_nodes == 0 ? 0 : static_cast<std::uint32_t>(in.labels[0].size());
  dropreef::LabelMatrix m(in.num_nodes, classes);
  for (NodeId v = 0; v < in.num_nodes; ++v) {
    for (std::uint32_t c = 0; c < classes; ++c) {
      if (in.labels[v][c]) m.set(v, c);
    }
  }
  return m;
}

inline dropreef::EdgeProbabilities to_probs(const Instance& in,
                                            const dropreef::CsrGraph& graph) {
  dropreef::EdgeProbabilities probs;
  probs.values.resize(graph.targets.size(), 1.0);
  for (NodeId v = 0; v < graph.num_nodes; ++v) {
    const auto row = graph.neighbors(v);
    for (std::size_t i = 0; i < row.size(); ++i) {
      probs.values[graph.offsets[v] + i] = in.p(v, row[i]);
    }
  }
  return probs;
}

inline dropreef::SplitMask to_mask(const Instance& in) {
  return dropreef::SplitMask{in.roles};
}

}  // namespace oracle
