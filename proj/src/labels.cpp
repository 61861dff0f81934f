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
#include "dropreef/labels.hpp"

#include <bit>
#include <cmath>

namespace dropreef {

LabelMatrix::LabelMatrix(NodeId num_nodes, std::uint32_t num_classes)
    : num_nodes_(num_nodes),
      num_classes_(num_classes),
      words_per_row_((num_classes + 63) / 64),
      bits_(static_cast<std::size_t>(num_nodes) * words_per_row_, 0) {}

void LabelMatrix::set(NodeId v, std::uint32_t cls) {
  if (v >= num_nodes_) {
    throw InputError("label row " + std::to_string(v) + " out of range");
  }
  if (cls >= num_classes_) {
    throw InputError("class index " + std::to_string(cls) + " out of range [0, " +
                     std::to_string(num_classes_) + ")");
  }
  bits_[word_index(v, cls)] |= std::uint64_t{1} << (cls % 64);
}

bool LabelMatrix::test(NodeId v, std::uint32_t cls) const {
  return (bits_[word_index(v, cls)] >> (cls % 64)) & 1;
}

std::uint32_t LabelMatrix::row_count(NodeId v) const {
  std::uint32_t n = 0;
  const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * words_per_row_;
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    n += static_cast<std::uint32_t>(std::popcount(row[w]));
  }
  return n;
}

std::vector<std::uint32_t> LabelMatrix::classes_of(NodeId v) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < num_classes_; ++c) {
    if (test(v, c)) out.push_back(c);
  }
  return out;
}

bool LabelMatrix::single_class() const {
  for (NodeId v = 0; v < num_nodes_; ++v) {
    if (row_count(v) != 1) return false;
  }
  return num_nodes_ > 0;
}

double LabelMatrix::distance(NodeId v, NodeId u) const {
  const std::uint64_t* rv = bits_.data() + static_cast<std::size_t>(v) * words_per_row_;
  const std::uint64_t* ru = bits_.data() + static_cast<std::size_t>(u) * words_per_row_;
  std::uint64_t diff = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    diff += static_cast<std::uint64_t>(std::popcount(rv[w] ^ ru[w]));
  }
  return std::sqrt(static_cast<double>(diff));
}

LabelMatrix LabelMatrix::remap(const NodeIdMap& map) const {
  LabelMatrix out(static_cast<NodeId>(map.old_of_new.size()), num_classes_);
  for (NodeId nv = 0; nv < out.num_nodes_; ++nv) {
    NodeId old = map.old_of_new[nv];
    std::copy(bits_.begin() + static_cast<std::size_t>(old) * words_per_row_,
              bits_.begin() + static_cast<std::size_t>(old + 1) * words_per_row_,
              out.bits_.begin() + static_cast<std::size_t>(nv) * words_per_row_);
  }
  return out;
}

void LabelMatrix::clear_rows(std::span<const NodeId> nodes) {
  for (NodeId v : nodes) {
    std::fill(bits_.begin() + static_cast<std::size_t>(v) * words_per_row_,
              bits_.begin() + static_cast<std::size_t>(v + 1) * words_per_row_,
              std::uint64_t{0});
  }
}

double label_distance(std::span<const std::uint8_t> cv,
                      std::span<const std::uint8_t> cu) {
  if (cv.size() != cu.size()) {
    throw InputError("label vectors differ in length: " +
                     std::to_string(cv.size()) + " vs " +
                     std::to_string(cu.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < cv.size(); ++i) {
    double d = static_cast<double>(cv[i]) - static_cast<double>(cu[i]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::vector<NodeId> SplitMask::nodes_with(Role role) const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < num_nodes(); ++v) {
    if (roles[v] == role) out.push_back(v);
  }
  return out;
}

std::uint64_t SplitMask::count(Role role) const {
  std::uint64_t n = 0;
  for (Role r : roles) {
    if (r == role) ++n;
  }
  return n;
}

SplitMask SplitMask::remap(const NodeIdMap& map) const {
  SplitMask out;
  out.roles.resize(map.old_of_new.size());
  for (std::size_t nv = 0; nv < map.old_of_new.size(); ++nv) {
    out.roles[nv] = roles[map.old_of_new[nv]];
  }
  return out;
}

}  // namespace dropreef
