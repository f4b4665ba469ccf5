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

#ifndef KOUT_GRAPH_HPP_
#define KOUT_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "kout/rng.hpp"

namespace kout {

// 0-based node label. Labels are dense in [0, n) within one graph.
using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

using Edge = std::pair<NodeId, NodeId>;

// The K selections of every node of a random K-out graph, kept in draw order.
class SelectionTable {
 public:
  SelectionTable() = default;
  SelectionTable(std::size_t n, std::size_t k, std::vector<NodeId> flat);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }

  std::span<const NodeId> choices(NodeId node) const noexcept {
    return {flat_.data() + static_cast<std::size_t>(node) * k_, k_};
  }

  // Table built from the first `k` draws of every node. A K-out table with
  // seed s truncated to k equals the k-out table generated from s.
  SelectionTable prefix(std::size_t k) const;

  // Throws ParameterError if any invariant (size, self-choice, range,
  // duplicates) is violated.
  void validate() const;

  friend bool operator==(const SelectionTable&, const SelectionTable&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<NodeId> flat_;
};

// Immutable undirected simple graph in compressed adjacency form. Neighbor
// lists are sorted and free of self-loops and duplicates.
class UGraph {
 public:
  UGraph() : offsets_(1, 0) {}

  // Builds from an arbitrary edge list. Throws ParameterError on a self-loop,
  // an endpoint >= n, or a repeated edge (in either orientation).
  static UGraph from_edges(std::size_t n, std::span<const Edge> edges);

  // Symmetrization of a selection table: {i, j} is an edge iff i picked j or
  // j picked i.
  static UGraph from_selection(const SelectionTable& table);

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId node) const noexcept {
    return {neighbors_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
  }
  std::size_t degree(NodeId node) const noexcept {
    return offsets_[node + 1] - offsets_[node];
  }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  // Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const UGraph&, const UGraph&) = default;

 private:
  UGraph(std::vector<std::size_t> offsets, std::vector<NodeId> neighbors)
      : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {}

  // Builds from per-node neighbor buckets that may hold duplicates.
  static UGraph from_buckets(std::size_t n, std::vector<std::size_t> offsets,
                             std::vector<NodeId> neighbors);

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
};

// Which nodes were removed, and the relabeling of the survivors. Survivors
// keep their relative order: compact id j is the j-th smallest surviving
// original id.
struct DeletionRecord {
  std::size_t gamma = 0;
  std::vector<NodeId> deleted;      // original ids, ascending
  std::vector<NodeId> compact_of;   // original id -> compact id or kNoNode
  std::vector<NodeId> original_of;  // compact id -> original id
};

struct GraphStats {
  std::size_t n = 0;
  std::size_t edge_count = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  double mean_degree = 0.0;
};

// Random K-out graph: each node independently selects k distinct other nodes
// uniformly at random. Node i draws from its own generator stream
// stream_seed(seed, i), so choices for k are a prefix of choices for k + 1.
// Throws ParameterError unless n >= 2 and 1 <= k <= n - 1.
SelectionTable generate_selection(std::size_t n, std::size_t k, RngSeed seed);
std::pair<UGraph, SelectionTable> generate_kout(std::size_t n, std::size_t k,
                                                RngSeed seed);

// Edge probability of the Erdos-Renyi graph with the same mean degree as
// a K-out graph: min(1, 2k/n).
double matched_er_probability(std::size_t n, std::size_t k);

// G(n, p) via geometric skipping over the C(n, 2) node pairs (Batagelj and
// Brandes). Calls visit(u, v) with u < v for every edge, in increasing order
// of v and then u.
template <typename Visit>
void for_each_er_edge(std::size_t n, double p, RngSeed seed, Visit&& visit);

UGraph generate_er(std::size_t n, double p, RngSeed seed);

// Uniform gamma-subset of [0, n), ascending.
std::vector<NodeId> sample_deleted_nodes(std::size_t n, std::size_t gamma, RngSeed seed);

// Each node removed independently with probability alpha, ascending.
std::vector<NodeId> sample_bernoulli_deleted(std::size_t n, double alpha, RngSeed seed);

// Induced subgraph on the complement of `deleted` (ascending, unique).
std::pair<UGraph, DeletionRecord> delete_nodes(const UGraph& g,
                                               std::span<const NodeId> deleted);

std::pair<UGraph, DeletionRecord> delete_random_nodes(const UGraph& g, std::size_t gamma,
                                                      RngSeed seed);
std::pair<UGraph, DeletionRecord> delete_bernoulli_nodes(const UGraph& g, double alpha,
                                                         RngSeed seed);

GraphStats graph_stats(const UGraph& g);

}  // namespace kout

#include "kout/graph_inl.hpp"

#endif  // KOUT_GRAPH_HPP_
