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
#include <stdexcept>
#include <string>

namespace dropreef {

// Node ids are 32-bit by default; define DROPREEF_WIDE_NODE_IDS at build
// time for graphs with more than 2^32 - 2 nodes.
#if defined(DROPREEF_WIDE_NODE_IDS)
using NodeId = std::uint64_t;
#else
using NodeId = std::uint32_t;
#endif

// Index into the concatenated CSR target array (2 * undirected edge count).
using EdgeIndex = std::uint64_t;

inline constexpr NodeId kInvalidNode = static_cast<NodeId>(-1);

// Malformed or inconsistent user input (files, ids, flags).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A guard against computations that would exhaust memory (dense matrices).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Violation of an internal consistency contract between components.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace dropreef
