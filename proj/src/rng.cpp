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

#include "kout/rng.hpp"

namespace kout {

namespace {
constexpr std::uint64_t kMapThreshold = 64;
}

std::uint64_t DistinctSampler::lookup(std::uint64_t slot) const {
  if (use_map_) {
    auto it = large_.find(slot);
    return it == large_.end() ? slot : it->second;
  }
  for (const auto& [s, v] : small_) {
    if (s == slot) return v;
  }
  return slot;
}

void DistinctSampler::store(std::uint64_t slot, std::uint64_t value) {
  if (use_map_) {
    large_[slot] = value;
    return;
  }
  for (auto& [s, v] : small_) {
    if (s == slot) {
      v = value;
      return;
    }
  }
  small_.emplace_back(slot, value);
}

void DistinctSampler::sample(Rng& rng, std::uint64_t universe, std::uint64_t count,
                             std::vector<std::uint64_t>& out) {
  out.clear();
  if (count > universe) count = universe;
  use_map_ = count > kMapThreshold;
  small_.clear();
  large_.clear();
  if (use_map_) large_.reserve(2 * count);
  out.reserve(count);
  // Slot t swaps with a uniform slot in [t, universe); only displaced slots
  // are materialized.
  for (std::uint64_t t = 0; t < count; ++t) {
    const std::uint64_t j = t + rng.below(universe - t);
    const std::uint64_t picked = lookup(j);
    store(j, lookup(t));
    out.push_back(picked);
  }
}

}  // namespace kout
