// Copyright 2026 The kout Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KOUT_GRAPH_INL_HPP_
#define KOUT_GRAPH_INL_HPP_

#include <cmath>
#include <cstdint>

#include "kout/error.hpp"

namespace kout {

template <typename Visit>
void for_each_er_edge(std::size_t n, double p, RngSeed seed, Visit&& visit) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0, 1]");
  }
  if (p == 0.0 || n < 2) return;
  if (p == 1.0) {
    for (std::size_t v = 1; v < n; ++v) {
      for (std::size_t w = 0; w < v; ++w) {
        visit(static_cast<NodeId>(w), static_cast<NodeId>(v));
      }
    }
    return;
  }
  Rng rng(seed);
  const double log_q = std::log1p(-p);
  const auto limit = static_cast<double>(n) * static_cast<double>(n);
  auto nn = static_cast<std::int64_t>(n);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < nn) {
    const double skip = std::floor(std::log1p(-rng.unit()) / log_q);
    w += 1 + static_cast<std::int64_t>(skip < limit ? skip : limit);
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) visit(static_cast<NodeId>(w), static_cast<NodeId>(v));
  }
}

}  // namespace kout

#endif  // KOUT_GRAPH_INL_HPP_
