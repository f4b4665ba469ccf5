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

#ifndef KOUT_COMPONENTS_HPP_
#define KOUT_COMPONENTS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "kout/graph.hpp"

namespace kout {

// Union-find with union by size and path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  NodeId find(NodeId x) noexcept;
  // Returns false when a and b were already joined.
  bool unite(NodeId a, NodeId b) noexcept;
  std::size_t size_of(NodeId x) noexcept { return size_[find(x)]; }
  std::size_t largest() const noexcept { return largest_; }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::size_t> size_;
  std::size_t largest_ = 0;
};

struct ComponentLabeling {
  // Component ids are dense and numbered by their smallest node.
  std::vector<std::uint32_t> component_of;
  std::vector<std::size_t> sizes;
  std::size_t largest_size = 0;

  std::size_t component_count() const noexcept { return sizes.size(); }
};

ComponentLabeling connected_components(const UGraph& g);

// All three throw ParameterError on a graph with no nodes.
bool is_connected(const UGraph& g);
std::size_t largest_component_size(const UGraph& g);
std::size_t nodes_outside_giant(const UGraph& g);

// Node subsets of graphs with at most 20 nodes, as bitmasks.
struct CutReport {
  std::vector<std::uint32_t> cuts;
  std::pair<std::size_t, std::size_t> size_range;
};

inline constexpr std::size_t kMaxCutNodes = 20;

// Every S with min_size <= |S| <= max_size that has no edge to its
// complement, in increasing mask order. The empty and full sets are never
// reported. Throws CapacityError above kMaxCutNodes nodes.
CutReport enumerate_cuts(const UGraph& g, std::size_t min_size, std::size_t max_size);

// Instance check of the giant-component lemma on a survivor graph g (so g
// has n - gamma nodes): if no cut has size in [lambda, n - gamma - lambda],
// the largest component has more than n - gamma - lambda nodes. Returns
// whether the implication holds; it always should.
bool verify_giant_lemma(const UGraph& g, std::size_t gamma, std::size_t lambda);

}  // namespace kout

#endif  // KOUT_COMPONENTS_HPP_
