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

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "kout/components.hpp"
#include "kout/error.hpp"
#include "oracles.hpp"

using namespace kout;

namespace {

// Labelings agree up to renaming iff both induce the same partition; both
// number components by smallest member, so they must match exactly.
void check_against_bfs(const UGraph& g) {
  const auto labels = connected_components(g);
  const auto bfs = oracle::bfs_labels(g);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    REQUIRE(labels.component_of[i] == static_cast<std::uint32_t>(bfs[i]));
  }
  CHECK(std::accumulate(labels.sizes.begin(), labels.sizes.end(), std::size_t{0}) ==
        g.node_count());
  CHECK(labels.largest_size == *std::max_element(labels.sizes.begin(), labels.sizes.end()));
  CHECK(labels.largest_size == oracle::bfs_largest(g));
}

}  // namespace

TEST_CASE("DisjointSets") {
  DisjointSets sets(6);
  CHECK(sets.unite(0, 1));
  CHECK(sets.unite(2, 3));
  CHECK_FALSE(sets.unite(1, 0));
  CHECK(sets.unite(1, 3));
  CHECK(sets.find(0) == sets.find(2));
  CHECK(sets.size_of(3) == 4);
  CHECK(sets.largest() == 4);
  CHECK(sets.size_of(5) == 1);
}

TEST_CASE("connected_components examples") {
  const auto tri = connected_components(oracle::triangle());
  CHECK(tri.component_count() == 1);
  CHECK(tri.sizes[0] == 3);

  const auto pair = connected_components(oracle::make_graph(4, {{0, 1}, {2, 3}}));
  CHECK(pair.component_count() == 2);
  CHECK(pair.sizes == std::vector<std::size_t>{2, 2});
  CHECK(pair.largest_size == 2);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    check_against_bfs(generate_kout(20, 2, RngSeed{seed}).first);
  }
  oracle::Lcg lcg{5};
  for (int i = 0; i < 50; ++i) check_against_bfs(oracle::random_graph(30, 1, 25, lcg));
}

TEST_CASE("connectivity queries") {
  CHECK(is_connected(oracle::path(5)));
  CHECK(nodes_outside_giant(oracle::path(5)) == 0);

  const auto tri_plus = oracle::make_graph(4, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_FALSE(is_connected(tri_plus));
  CHECK(nodes_outside_giant(tri_plus) == 1);
  CHECK(largest_component_size(tri_plus) == 3);

  CHECK_THROWS_AS(is_connected(UGraph{}), ParameterError);
  CHECK_THROWS_AS(nodes_outside_giant(UGraph{}), ParameterError);
}

TEST_CASE("outside count on a large deleted K-out graph matches BFS") {
  auto [g, table] = generate_kout(5000, 10, RngSeed{2000});
  auto [h, rec] = delete_random_nodes(g, 2000, RngSeed{2001});
  CHECK(nodes_outside_giant(h) == h.node_count() - oracle::bfs_largest(h));
  check_against_bfs(h);

  // Sparser case where the outside count is not zero.
  auto [g2, t2] = generate_kout(5000, 3, RngSeed{2002});
  auto [h2, r2] = delete_random_nodes(g2, 2500, RngSeed{2003});
  CHECK(nodes_outside_giant(h2) > 0);
  CHECK(nodes_outside_giant(h2) == h2.node_count() - oracle::bfs_largest(h2));
}

TEST_CASE("enumerate_cuts examples") {
  CHECK(enumerate_cuts(oracle::triangle(), 1, 2).cuts.empty());

  const auto two = oracle::make_graph(4, {{0, 1}, {2, 3}});
  const auto report = enumerate_cuts(two, 1, 3);
  CHECK(report.cuts == std::vector<std::uint32_t>{0b0011, 0b1100});
  CHECK(report.size_range == std::pair<std::size_t, std::size_t>{1, 3});

  CHECK_THROWS_AS(enumerate_cuts(oracle::path(21), 1, 20), CapacityError);
  CHECK_THROWS_AS(enumerate_cuts(oracle::path(4), 0, 3), ParameterError);
  CHECK_THROWS_AS(enumerate_cuts(oracle::path(4), 1, 4), ParameterError);
}

TEST_CASE("cuts of K-out(8, 1) are exactly the unions of components") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = generate_kout(8, 1, RngSeed{seed}).first;
    const auto labels = oracle::bfs_labels(g);
    const int components = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::uint32_t> expected;
    for (std::uint32_t pick = 1; pick + 1 < (1U << components); ++pick) {
      std::uint32_t mask = 0;
      for (NodeId i = 0; i < 8; ++i) {
        if ((pick >> labels[i]) & 1U) mask |= 1U << i;
      }
      expected.push_back(mask);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(enumerate_cuts(g, 1, 7).cuts == expected);
  }
}

TEST_CASE("is_connected iff no cuts") {
  oracle::Lcg lcg{8};
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + lcg.next() % 10;
    const auto g = oracle::random_graph(n, 1 + lcg.next() % 3, 6, lcg);
    CHECK(is_connected(g) == enumerate_cuts(g, 1, n - 1).cuts.empty());
  }
}

TEST_CASE("component count never increases when an edge is added") {
  oracle::Lcg lcg{31};
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + lcg.next() % 15;
    const auto g = oracle::random_graph(n, 1, 5, lcg);
    auto edges = g.edges();
    const NodeId u = lcg.next() % n;
    const NodeId v = lcg.next() % n;
    if (u == v || g.has_edge(u, v)) continue;
    edges.emplace_back(std::min(u, v), std::max(u, v));
    const auto h = UGraph::from_edges(n, edges);
    CHECK(connected_components(h).component_count() <=
          connected_components(g).component_count());
  }
}

TEST_CASE("verify_giant_lemma examples") {
  CHECK(verify_giant_lemma(oracle::path(9), 0, 3));
  CHECK(verify_giant_lemma(oracle::complete(6), 2, 2));

  // Components of sizes 6 and 2 among 8 survivors, lambda = 2.
  const auto split = oracle::make_graph(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}});
  CHECK(verify_giant_lemma(split, 4, 2));
  CHECK_FALSE(enumerate_cuts(split, 2, 6).cuts.empty());

  CHECK_THROWS_AS(verify_giant_lemma(oracle::path(6), 0, 3), ParameterError);
  CHECK_THROWS_AS(verify_giant_lemma(oracle::path(6), 0, 0), ParameterError);
  CHECK_THROWS_AS(verify_giant_lemma(oracle::path(21), 0, 1), CapacityError);
}

TEST_CASE("giant lemma holds on 1000 random small instances") {
  oracle::Lcg lcg{99};
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 6 + lcg.next() % 14;
    const std::size_t k = 1 + lcg.next() % 2;
    const std::size_t gamma = lcg.next() % (n - 3);
    auto [g, table] = generate_kout(n, k, RngSeed{lcg.next()});
    auto [h, rec] = delete_random_nodes(g, gamma, RngSeed{lcg.next()});
    const std::size_t cap = h.node_count() / 3;
    if (cap < 1) continue;
    const std::size_t lambda = 1 + lcg.next() % cap;
    CHECK(verify_giant_lemma(h, gamma, lambda));
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("outside count is non-increasing in k for coupled samples") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto table = generate_selection(400, 6, RngSeed{seed});
    const auto deleted = sample_deleted_nodes(400, 250, RngSeed{seed + 1000});
    std::size_t previous = SIZE_MAX;
    for (std::size_t k = 1; k <= 6; ++k) {
      const auto g = UGraph::from_selection(table.prefix(k));
      const auto outside = nodes_outside_giant(delete_nodes(g, deleted).first);
      CHECK(outside <= previous);
      previous = outside;
    }
  }
}
