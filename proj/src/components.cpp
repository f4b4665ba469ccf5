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

#include "kout/components.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kout/error.hpp"

namespace kout {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), largest_(n ? 1 : 0) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<NodeId>(i);
}

NodeId DisjointSets::find(NodeId x) noexcept {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(NodeId a, NodeId b) noexcept {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  largest_ = std::max(largest_, size_[a]);
  return true;
}

ComponentLabeling connected_components(const UGraph& g) {
  const std::size_t n = g.node_count();
  DisjointSets sets(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (v > u) sets.unite(u, v);
    }
  }
  ComponentLabeling out;
  out.component_of.assign(n, 0);
  std::vector<std::uint32_t> id_of_root(n, UINT32_MAX);
  for (NodeId u = 0; u < n; ++u) {
    const NodeId root = sets.find(u);
    if (id_of_root[root] == UINT32_MAX) {
      id_of_root[root] = static_cast<std::uint32_t>(out.sizes.size());
      out.sizes.push_back(0);
    }
    const std::uint32_t id = id_of_root[root];
    out.component_of[u] = id;
    ++out.sizes[id];
  }
  out.largest_size = sets.largest();
  return out;
}

std::size_t largest_component_size(const UGraph& g) {
  if (g.node_count() == 0) throw ParameterError("graph has no nodes");
  return connected_components(g).largest_size;
}

std::size_t nodes_outside_giant(const UGraph& g) {
  return g.node_count() - largest_component_size(g);
}

bool is_connected(const UGraph& g) { return nodes_outside_giant(g) == 0; }

namespace {

std::vector<std::uint32_t> adjacency_masks(const UGraph& g) {
  std::vector<std::uint32_t> adj(g.node_count(), 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) adj[u] |= std::uint32_t{1} << v;
  }
  return adj;
}

}  // namespace

CutReport enumerate_cuts(const UGraph& g, std::size_t min_size, std::size_t max_size) {
  const std::size_t n = g.node_count();
  if (n > kMaxCutNodes) {
    throw CapacityError("cut enumeration supports at most " + std::to_string(kMaxCutNodes) +
                        " nodes, got " + std::to_string(n));
  }
  if (min_size < 1) throw ParameterError("minimum cut size must be at least 1");
  if (n >= 1 && max_size > n - 1) throw ParameterError("maximum cut size must be at most n - 1");

  CutReport report;
  report.size_range = {min_size, max_size};
  if (n < 2 || min_size > max_size) return report;

  const auto adj = adjacency_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < min_size || size > max_size) continue;
    const std::uint32_t outside = full & ~mask;
    bool isolated = true;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      if (adj[std::countr_zero(rest)] & outside) {
        isolated = false;
        break;
      }
    }
    if (isolated) report.cuts.push_back(mask);
  }
  return report;
}

bool verify_giant_lemma(const UGraph& g, [[maybe_unused]] std::size_t gamma,
                        std::size_t lambda) {
  const std::size_t survivors = g.node_count();
  if (survivors > kMaxCutNodes) {
    throw CapacityError("giant-component lemma check supports at most " +
                        std::to_string(kMaxCutNodes) + " surviving nodes");
  }
  if (lambda < 1 || lambda > survivors / 3) {
    throw ParameterError("lambda must lie in [1, floor((n - gamma) / 3)]");
  }
  const std::size_t upper = survivors - lambda;
  const bool no_cut = enumerate_cuts(g, lambda, upper).cuts.empty();
  const bool giant = largest_component_size(g) > upper;
  return !no_cut || giant;
}

}  // namespace kout
