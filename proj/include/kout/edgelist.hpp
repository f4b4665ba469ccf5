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

#ifndef KOUT_EDGELIST_HPP_
#define KOUT_EDGELIST_HPP_

// Edge-list text format:
//
//   # kout-edgelist n=5 k=2 seed=42
//   # deleted gamma=2 ids=1,3
//   0 1
//   0 2
//
// Comment lines start with '#'. The first comment carries key=value
// metadata; `n=` fixes the node count so isolated trailing nodes survive a
// round trip. Each other line is one edge "u v" of 0-based ids. Export
// writes u < v in lexicographic order.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "kout/graph.hpp"

namespace kout {

struct EdgeListHeader {
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<NodeId>> deleted;  // original ids, when produced by deletion
};

void export_edgelist(const UGraph& g, std::ostream& sink, const EdgeListHeader& header = {});

struct ImportedGraph {
  UGraph graph;
  EdgeListHeader header;
};

// Throws FormatError carrying the 1-based line number on malformed lines,
// out-of-range ids, self-loops, and duplicate edges.
ImportedGraph import_edgelist(std::istream& source);

}  // namespace kout

#endif  // KOUT_EDGELIST_HPP_
