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
#include <span>
#include <vector>

#include "dropreef/csr_graph.hpp"
#include "dropreef/types.hpp"

namespace dropreef {

/// Per-node binary class vectors, bit-packed row-major.
///
/// A row is the label vector c_v of width num_classes. Single-class data has
/// exactly one bit per row; multi-class rows carry any subset (zero rows
/// permitted).
class LabelMatrix {
 public:
  LabelMatrix() = default;
  LabelMatrix(NodeId num_nodes, std::uint32_t num_classes);

  NodeId num_nodes() const { return num_nodes_; }
  std::uint32_t num_classes() const { return num_classes_; }

  void set(NodeId v, std::uint32_t cls);
  bool test(NodeId v, std::uint32_t cls) const;

  /// Number of classes present on node v.
  std::uint32_t row_count(NodeId v) const;

  /// Ascending class indices present on node v.
  std::vector<std::uint32_t> classes_of(NodeId v) const;

  /// True when every row has exactly one class.
  bool single_class() const;

  /// Euclidean distance between the label vectors of v and u. For binary
  /// vectors this is the square root of the symmetric-difference size.
  double distance(NodeId v, NodeId u) const;

  /// Labels restricted to the retained nodes of `map`, reindexed.
  LabelMatrix remap(const NodeIdMap& map) const;

  /// Clears the rows of the given nodes (used by retain-edges drop mode).
  void clear_rows(std::span<const NodeId> nodes);

  bool operator==(const LabelMatrix& other) const = default;

 private:
  std::size_t word_index(NodeId v, std::uint32_t cls) const {
    return static_cast<std::size_t>(v) * words_per_row_ + cls / 64;
  }

  NodeId num_nodes_{0};
  std::uint32_t num_classes_{0};
  std::size_t words_per_row_{0};
  std::vector<std::uint64_t> bits_;
};

/// Euclidean norm of the elementwise difference of two label vectors given
/// as explicit 0/1 sequences. Throws InputError on length mismatch.
double label_distance(std::span<const std::uint8_t> cv,
                      std::span<const std::uint8_t> cu);

enum class Role : std::uint8_t { kTrain, kVal, kTest, kDropped };

/// Per-node split role. Input files carry {train, val, test}; the kDropped
/// role only appears in outputs of the retain-edges drop mode.
struct SplitMask {
  std::vector<Role> roles;

  NodeId num_nodes() const { return static_cast<NodeId>(roles.size()); }
  std::vector<NodeId> nodes_with(Role role) const;
  std::uint64_t count(Role role) const;
  SplitMask remap(const NodeIdMap& map) const;
};

}  // namespace dropreef
