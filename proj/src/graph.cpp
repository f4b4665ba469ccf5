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

#include "kout/graph.hpp"

#include <algorithm>
#include <string>

#include "kout/error.hpp"

namespace kout {

SelectionTable::SelectionTable(std::size_t n, std::size_t k, std::vector<NodeId> flat)
    : n_(n), k_(k), flat_(std::move(flat)) {
  if (flat_.size() != n_ * k_) {
    throw ParameterError("selection table size does not match n * k");
  }
}

SelectionTable SelectionTable::prefix(std::size_t k) const {
  if (k > k_) throw ParameterError("prefix longer than the table's k");
  std::vector<NodeId> flat;
  flat.reserve(n_ * k);
  for (std::size_t i = 0; i < n_; ++i) {
    auto row = choices(static_cast<NodeId>(i));
    flat.insert(flat.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return SelectionTable(n_, k, std::move(flat));
}

void SelectionTable::validate() const {
  if (flat_.size() != n_ * k_) throw ParameterError("selection table size mismatch");
  std::vector<NodeId> row;
  for (std::size_t i = 0; i < n_; ++i) {
    auto c = choices(static_cast<NodeId>(i));
    row.assign(c.begin(), c.end());
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw ParameterError("node " + std::to_string(i) + " selects a node twice");
    }
    for (NodeId j : row) {
      if (j == i) throw ParameterError("node " + std::to_string(i) + " selects itself");
      if (j >= n_) throw ParameterError("selection out of range at node " + std::to_string(i));
    }
  }
}

UGraph UGraph::from_buckets(std::size_t n, std::vector<std::size_t> offsets,
                            std::vector<NodeId> neighbors) {
  // Sort each bucket, drop repeats, and compact in place.
  std::size_t write = 0;
  std::size_t begin = offsets[0];
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t end = offsets[i + 1];
    auto first = neighbors.begin() + static_cast<std::ptrdiff_t>(begin);
    auto last = neighbors.begin() + static_cast<std::ptrdiff_t>(end);
    std::sort(first, last);
    last = std::unique(first, last);
    offsets[i] = write;
    for (auto it = first; it != last; ++it) neighbors[write++] = *it;
    begin = end;
  }
  offsets[n] = write;
  neighbors.resize(write);
  neighbors.shrink_to_fit();
  return UGraph(std::move(offsets), std::move(neighbors));
}

UGraph UGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw ParameterError("self-loop at node " + std::to_string(u));
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<NodeId> neighbors(offsets[n]);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    neighbors[cursor[u]++] = v;
    neighbors[cursor[v]++] = u;
  }
  const std::size_t before = neighbors.size();
  UGraph g = from_buckets(n, std::move(offsets), std::move(neighbors));
  if (g.neighbors_.size() != before) throw ParameterError("duplicate edge");
  return g;
}

UGraph UGraph::from_selection(const SelectionTable& table) {
  const std::size_t n = table.node_count();
  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (NodeId j : table.choices(static_cast<NodeId>(i))) {
      ++offsets[i + 1];
      ++offsets[j + 1];
    }
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<NodeId> neighbors(offsets[n]);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (NodeId j : table.choices(static_cast<NodeId>(i))) {
      neighbors[cursor[i]++] = j;
      neighbors[cursor[j]++] = static_cast<NodeId>(i);
    }
  }
  return from_buckets(n, std::move(offsets), std::move(neighbors));
}

bool UGraph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> UGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(static_cast<NodeId>(u))) {
      if (v > u) out.emplace_back(static_cast<NodeId>(u), v);
    }
  }
  return out;
}

SelectionTable generate_selection(std::size_t n, std::size_t k, RngSeed seed) {
  if (n < 2) throw ParameterError("K-out graph needs n >= 2");
  if (k < 1 || k >= n) throw ParameterError("K-out graph needs 1 <= k <= n - 1");
  if (n > kNoNode) throw ParameterError("node count exceeds the 32-bit label space");
  std::vector<NodeId> flat;
  flat.reserve(n * k);
  DistinctSampler sampler;
  std::vector<std::uint64_t> draw;
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(stream_seed(seed, i));
    // Draw from the n - 1 labels other than i; shift past i.
    sampler.sample(rng, n - 1, k, draw);
    for (std::uint64_t t : draw) flat.push_back(static_cast<NodeId>(t >= i ? t + 1 : t));
  }
  return SelectionTable(n, k, std::move(flat));
}

std::pair<UGraph, SelectionTable> generate_kout(std::size_t n, std::size_t k, RngSeed seed) {
  SelectionTable table = generate_selection(n, k, seed);
  UGraph g = UGraph::from_selection(table);
  return {std::move(g), std::move(table)};
}

double matched_er_probability(std::size_t n, std::size_t k) {
  if (n < 2 || k < 1) throw ParameterError("matched ER probability needs n >= 2, k >= 1");
  return std::min(1.0, 2.0 * static_cast<double>(k) / static_cast<double>(n));
}

UGraph generate_er(std::size_t n, double p, RngSeed seed) {
  std::vector<Edge> edges;
  for_each_er_edge(n, p, seed, [&](NodeId u, NodeId v) { edges.emplace_back(u, v); });
  return UGraph::from_edges(n, edges);
}

std::vector<NodeId> sample_deleted_nodes(std::size_t n, std::size_t gamma, RngSeed seed) {
  if (gamma >= n) throw ParameterError("deletion count must be below the node count");
  Rng rng(seed);
  DistinctSampler sampler;
  std::vector<std::uint64_t> draw;
  sampler.sample(rng, n, gamma, draw);
  std::vector<NodeId> deleted(draw.begin(), draw.end());
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

std::vector<NodeId> sample_bernoulli_deleted(std::size_t n, double alpha, RngSeed seed) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ParameterError("removal probability must lie in [0, 1)");
  Rng rng(seed);
  std::vector<NodeId> deleted;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.unit() < alpha) deleted.push_back(static_cast<NodeId>(i));
  }
  // Keep at least one survivor so downstream metrics stay defined.
  if (deleted.size() == n && n > 0) deleted.pop_back();
  return deleted;
}

std::pair<UGraph, DeletionRecord> delete_nodes(const UGraph& g,
                                               std::span<const NodeId> deleted) {
  const std::size_t n = g.node_count();
  if (deleted.size() >= n && n > 0) {
    throw ParameterError("deletion count must be below the node count");
  }
  DeletionRecord rec;
  rec.gamma = deleted.size();
  rec.deleted.assign(deleted.begin(), deleted.end());
  std::sort(rec.deleted.begin(), rec.deleted.end());
  rec.compact_of.assign(n, 0);
  for (NodeId d : deleted) {
    if (d >= n) throw ParameterError("deleted node out of range");
    rec.compact_of[d] = kNoNode;
  }
  rec.original_of.reserve(n - deleted.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (rec.compact_of[i] == kNoNode) continue;
    rec.compact_of[i] = static_cast<NodeId>(rec.original_of.size());
    rec.original_of.push_back(static_cast<NodeId>(i));
  }
  if (rec.original_of.size() != n - deleted.size()) {
    throw ParameterError("deleted node list contains duplicates");
  }

  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    const NodeId cu = rec.compact_of[u];
    if (cu == kNoNode) continue;
    for (NodeId v : g.neighbors(u)) {
      if (v <= u) continue;
      const NodeId cv = rec.compact_of[v];
      if (cv != kNoNode) edges.emplace_back(cu, cv);
    }
  }
  UGraph survivor = UGraph::from_edges(rec.original_of.size(), edges);
  return {std::move(survivor), std::move(rec)};
}

std::pair<UGraph, DeletionRecord> delete_random_nodes(const UGraph& g, std::size_t gamma,
                                                      RngSeed seed) {
  if (gamma >= g.node_count()) {
    throw ParameterError("deletion count must be below the node count");
  }
  auto deleted = sample_deleted_nodes(g.node_count(), gamma, seed);
  return delete_nodes(g, deleted);
}

std::pair<UGraph, DeletionRecord> delete_bernoulli_nodes(const UGraph& g, double alpha,
                                                         RngSeed seed) {
  auto deleted = sample_bernoulli_deleted(g.node_count(), alpha, seed);
  return delete_nodes(g, deleted);
}

GraphStats graph_stats(const UGraph& g) {
  GraphStats s;
  s.n = g.node_count();
  s.edge_count = g.edge_count();
  if (s.n == 0) return s;
  s.min_degree = g.degree(0);
  for (NodeId i = 0; i < s.n; ++i) {
    s.min_degree = std::min(s.min_degree, g.degree(i));
    s.max_degree = std::max(s.max_degree, g.degree(i));
  }
  s.mean_degree = 2.0 * static_cast<double>(s.edge_count) / static_cast<double>(s.n);
  return s;
}

}  // namespace kout
