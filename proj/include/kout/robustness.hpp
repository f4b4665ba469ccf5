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

#ifndef KOUT_ROBUSTNESS_HPP_
#define KOUT_ROBUSTNESS_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>

#include "kout/execution.hpp"
#include "kout/graph.hpp"

namespace kout {

// Node subset of a small graph; bit i set means node i is a member.
struct SubsetMask {
  std::uint32_t bits = 0;

  bool empty() const noexcept { return bits == 0; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits)); }
  bool contains(NodeId i) const noexcept { return i < 32 && ((bits >> i) & 1U); }

  friend bool operator==(SubsetMask, SubsetMask) = default;
};

struct RobustnessVerdict {
  std::size_t r = 0;
  bool robust = true;
  // Present iff !robust: the first failing pair in (S1 | S2, S1) mask order,
  // with S1 holding the lowest-index node of the pair.
  std::optional<std::pair<SubsetMask, SubsetMask>> witness;
};

inline constexpr std::size_t kMaxRobustnessNodes = 16;

// True iff some node of S has at least r neighbors outside S (anywhere in
// the graph). Throws ParameterError for empty S, r = 0, or bits >= n.
bool is_r_reachable(const UGraph& g, SubsetMask s, std::size_t r);

// Exhaustive check over all unordered pairs of nonempty disjoint subsets.
// Throws CapacityError above kMaxRobustnessNodes nodes. Serial and parallel
// runs return identical verdicts, witness included.
RobustnessVerdict is_r_robust_bruteforce(const UGraph& g, std::size_t r,
                                         Execution exec = Execution::parallel);

// Largest r >= 1 for which g is r-robust, 0 for a disconnected graph.
std::size_t max_robustness(const UGraph& g, Execution exec = Execution::parallel);

// Size of the smallest node set whose removal disconnects g; n - 1 for a
// complete graph and 0 for a disconnected one.
std::size_t vertex_connectivity_bruteforce(const UGraph& g);

}  // namespace kout

#endif  // KOUT_ROBUSTNESS_HPP_
