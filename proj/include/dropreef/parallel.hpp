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
#include <thread>
#include <vector>

namespace dropreef {

/// Runs f(i) for i in [begin, end) across `threads` workers in static
/// contiguous blocks. Each index is visited exactly once; callers must write
/// only to per-index slots so results do not depend on the worker count.
template <typename F>
void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned threads,
                  F&& f) {
  const std::uint64_t n = end - begin;
  if (threads <= 1 || n < 2) {
    for (std::uint64_t i = begin; i < end; ++i) f(i);
    return;
  }
  if (threads > n) threads = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::uint64_t chunk = n / threads;
  const std::uint64_t rest = n % threads;
  std::uint64_t lo = begin;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t hi = lo + chunk + (t < rest ? 1 : 0);
    pool.emplace_back([lo, hi, &f] {
      for (std::uint64_t i = lo; i < hi; ++i) f(i);
    });
    lo = hi;
  }
  for (auto& th : pool) th.join();
}

}  // namespace dropreef
