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

#include "kout/robustness.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <vector>

#include "kout/components.hpp"
#include "kout/error.hpp"

namespace kout {

namespace {

void check_capacity(const UGraph& g) {
  if (g.node_count() > kMaxRobustnessNodes) {
    throw CapacityError("exhaustive robustness checks support at most " +
                        std::to_string(kMaxRobustnessNodes) + " nodes, got " +
                        std::to_string(g.node_count()));
  }
}

std::vector<std::uint32_t> adjacency_masks(const UGraph& g) {
  std::vector<std::uint32_t> adj(g.node_count(), 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) adj[u] |= std::uint32_t{1} << v;
  }
  return adj;
}

bool reachable(const std::vector<std::uint32_t>& adj, std::uint32_t set, std::uint32_t full,
               std::size_t r) {
  const std::uint32_t outside = full & ~set;
  for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
    if (static_cast<std::size_t>(std::popcount(adj[std::countr_zero(rest)] & outside)) >= r) {
      return true;
    }
  }
  return false;
}

// reach[mask] for every mask over n nodes.
std::vector<std::uint8_t> reachability_table(const std::vector<std::uint32_t>& adj,
                                             std::size_t r, Execution exec) {
  const std::size_t n = adj.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(count), 0);
#pragma omp parallel for schedule(static) if (exec == Execution::parallel && count > 4096)
  for (std::int64_t mask = 1; mask < count; ++mask) {
    reach[static_cast<std::size_t>(mask)] =
        reachable(adj, static_cast<std::uint32_t>(mask), full, r) ? 1 : 0;
  }
  return reach;
}

// First failing split of `uni` in increasing S1 order, or 0.
std::uint32_t first_failing_split(const std::vector<std::uint8_t>& reach, std::uint32_t uni) {
  const std::uint32_t low = uni & (0U - uni);
  const std::uint32_t rest = uni ^ low;
  // Subsets of rest in increasing numeric order, excluding rest itself so
  // that S2 stays nonempty.
  std::uint32_t sub = 0;
  do {
    const std::uint32_t s1 = low | sub;
    const std::uint32_t s2 = rest ^ sub;
    if (!reach[s1] && !reach[s2]) return s1;
    sub = (sub - rest) & rest;
  } while (sub != rest && sub != 0);
  return 0;
}

}  // namespace

bool is_r_reachable(const UGraph& g, SubsetMask s, std::size_t r) {
  if (s.empty()) throw ParameterError("subset must be nonempty");
  if (r < 1) throw ParameterError("r must be at least 1");
  const std::size_t n = g.node_count();
  if (n < 32 && (s.bits >> n) != 0) throw ParameterError("subset has nodes outside the graph");
  for (std::uint32_t rest = s.bits; rest != 0; rest &= rest - 1) {
    const auto i = static_cast<NodeId>(std::countr_zero(rest));
    std::size_t outside = 0;
    for (NodeId j : g.neighbors(i)) {
      if (!s.contains(j)) ++outside;
    }
    if (outside >= r) return true;
  }
  return false;
}

RobustnessVerdict is_r_robust_bruteforce(const UGraph& g, std::size_t r, Execution exec) {
  check_capacity(g);
  if (r < 1) throw ParameterError("r must be at least 1");
  RobustnessVerdict verdict;
  verdict.r = r;
  const std::size_t n = g.node_count();
  if (n < 2) return verdict;

  const auto adj = adjacency_masks(g);
  const auto reach = reachability_table(adj, r, exec);
  const std::int64_t count = std::int64_t{1} << n;

  // Smallest union with a failing split; within it the smallest S1.
  std::atomic<std::int64_t> best{count};
  std::uint32_t best_s1 = 0;
#pragma omp parallel for schedule(dynamic, 256) if (exec == Execution::parallel)
  for (std::int64_t uni = 3; uni < count; ++uni) {
    if (uni >= best.load(std::memory_order_relaxed)) continue;
    const auto u = static_cast<std::uint32_t>(uni);
    if (std::popcount(u) < 2) continue;
    const std::uint32_t s1 = first_failing_split(reach, u);
    if (s1 == 0) continue;
#pragma omp critical(kout_robust_witness)
    {
      if (uni < best.load(std::memory_order_relaxed)) {
        best.store(uni, std::memory_order_relaxed);
        best_s1 = s1;
      }
    }
  }

  if (best.load() < count) {
    const auto u = static_cast<std::uint32_t>(best.load());
    verdict.robust = false;
    verdict.witness = std::make_pair(SubsetMask{best_s1}, SubsetMask{u ^ best_s1});
  }
  return verdict;
}

std::size_t max_robustness(const UGraph& g, Execution exec) {
  check_capacity(g);
  const std::size_t n = g.node_count();
  if (n == 0) throw ParameterError("graph has no nodes");
  if (!is_connected(g)) return 0;
  // No graph on n nodes is more than ceil(n/2)-robust.
  const std::size_t cap = std::max<std::size_t>(1, (n + 1) / 2);
  std::size_t best = 0;
  for (std::size_t r = 1; r <= cap; ++r) {
    if (!is_r_robust_bruteforce(g, r, exec).robust) break;
    best = r;
  }
  return best;
}

std::size_t vertex_connectivity_bruteforce(const UGraph& g) {
  check_capacity(g);
  const std::size_t n = g.node_count();
  if (n == 0) throw ParameterError("graph has no nodes");
  if (!is_connected(g)) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;

  const auto adj = adjacency_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  auto connected_after_removing = [&](std::uint32_t removed) {
    const std::uint32_t alive = full & ~removed;
    const std::uint32_t start = alive & (0U - alive);
    std::uint32_t seen = start;
    std::uint32_t frontier = start;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= alive & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == alive;
  };

  // A non-complete graph has two non-adjacent nodes, so removing the other
  // n - 2 nodes disconnects it; the answer is at most n - 2.
  for (std::size_t kappa = 1; kappa + 2 <= n; ++kappa) {
    // Gosper's hack over all kappa-subsets.
    std::uint32_t set = (std::uint32_t{1} << kappa) - 1;
    while (set <= full) {
      if (!connected_after_removing(set)) return kappa;
      const std::uint32_t c = set & (0U - set);
      const std::uint32_t rr = set + c;
      set = (((rr ^ set) >> 2) / c) | rr;
    }
  }
  return n - 2;
}

}  // namespace kout
