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

#include <filesystem>
#include <vector>

#include "dropreef/csr_graph.hpp"
#include "dropreef/types.hpp"

namespace dropreef {

/// Per-edge linking probabilities, parallel to the graph's target array.
///
/// values[i] is p_vu for the directed slot i = (v -> u). All providers keep
/// the structure symmetric: the slot (v -> u) and its mirror (u -> v) hold
/// the same value, and every value lies in [0, 1].
struct EdgeProbabilities {
  std::vector<double> values;

  /// Range and slot-pair symmetry scan; throws InternalError on violation.
  void validate(const CsrGraph& graph) const;

  /// Probabilities restricted to the subgraph described by (new_graph, map).
  EdgeProbabilities remap(const CsrGraph& old_graph, const CsrGraph& new_graph,
                          const NodeIdMap& map) const;
};

/// Degenerate provider: every probability 1, which makes the weighted
/// heterophily coincide with the unweighted one.
EdgeProbabilities uniform_probs(const CsrGraph& graph);

/// Ingests an externally precomputed probability file. Each record
/// `u v p` fills both directed slots; unlisted edges default to 1.0.
/// Errors: p outside [0,1], records naming non-edges, and duplicate
/// records with conflicting p.
EdgeProbabilities load_probs(const std::filesystem::path& path,
                             const CsrGraph& graph);

enum class ProbMethod { kJaccard, kCommonNeighbors };

/// Deterministic link-score heuristics standing in for a learned predictor.
///
/// jaccard: |N(v) ∩ N(u)| / |N(v) ∪ N(u)| with the edge's endpoints
/// excluded from the union (0 when the union is empty).
/// common-neighbors: shared-neighbor count normalized by the maximum count
/// over all edges (all zeros when no edge shares a neighbor).
EdgeProbabilities heuristic_probs(const CsrGraph& graph, ProbMethod method,
                                  unsigned threads = 1);

}  // namespace dropreef
