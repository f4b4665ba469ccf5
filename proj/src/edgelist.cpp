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

#include "kout/edgelist.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

#include "kout/error.hpp"

namespace kout {

namespace {

template <typename T>
std::optional<T> parse_number(std::string_view token) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

void parse_metadata(std::string_view comment, std::size_t line_no, EdgeListHeader& header) {
  for (std::string_view token : split_ws(comment)) {
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) continue;
    const std::string_view key = token.substr(0, eq);
    const std::string_view value = token.substr(eq + 1);
    auto bad = [&] {
      return FormatError(line_no, "bad header value '" + std::string(token) + "'");
    };
    if (key == "n") {
      header.n = parse_number<std::size_t>(value);
      if (!header.n) throw bad();
    } else if (key == "k") {
      header.k = parse_number<std::size_t>(value);
      if (!header.k) throw bad();
    } else if (key == "seed") {
      header.seed = parse_number<std::uint64_t>(value);
      if (!header.seed) throw bad();
    } else if (key == "ids") {
      std::vector<NodeId> ids;
      std::size_t start = 0;
      while (start < value.size()) {
        std::size_t comma = value.find(',', start);
        if (comma == std::string_view::npos) comma = value.size();
        auto id = parse_number<NodeId>(value.substr(start, comma - start));
        if (!id) throw bad();
        ids.push_back(*id);
        start = comma + 1;
      }
      header.deleted = std::move(ids);
    }
  }
}

}  // namespace

void export_edgelist(const UGraph& g, std::ostream& sink, const EdgeListHeader& header) {
  sink << "# kout-edgelist n=" << g.node_count();
  if (header.k) sink << " k=" << *header.k;
  if (header.seed) sink << " seed=" << *header.seed;
  sink << '\n';
  if (header.deleted) {
    sink << "# deleted gamma=" << header.deleted->size() << " ids=";
    for (std::size_t i = 0; i < header.deleted->size(); ++i) {
      if (i) sink << ',';
      sink << (*header.deleted)[i];
    }
    sink << '\n';
  }
  for (const auto& [u, v] : g.edges()) sink << u << ' ' << v << '\n';
}

ImportedGraph import_edgelist(std::istream& source) {
  EdgeListHeader header;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::string line;
  std::size_t line_no = 0;
  std::size_t max_id_plus_one = 0;
  while (std::getline(source, line)) {
    ++line_no;
    std::string_view view(line);
    auto tokens = split_ws(view);
    if (tokens.empty()) continue;
    if (tokens.front().front() == '#') {
      if (edges.empty()) parse_metadata(view.substr(view.find('#') + 1), line_no, header);
      continue;
    }
    if (tokens.size() != 2) {
      throw FormatError(line_no, "expected two node ids, got '" + line + "'");
    }
    auto u = parse_number<NodeId>(tokens[0]);
    auto v = parse_number<NodeId>(tokens[1]);
    if (!u || !v) throw FormatError(line_no, "node ids must be non-negative integers");
    if (*u == *v) throw FormatError(line_no, "self-loop at node " + std::to_string(*u));
    if (header.n && (*u >= *header.n || *v >= *header.n)) {
      throw FormatError(line_no, "node id out of range for n=" + std::to_string(*header.n));
    }
    Edge e = *u < *v ? Edge{*u, *v} : Edge{*v, *u};
    if (!seen.insert(e).second) {
      throw FormatError(line_no, "duplicate edge " + std::to_string(e.first) + " " +
                                     std::to_string(e.second));
    }
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, e.second + std::size_t{1});
    edges.push_back(e);
  }
  if (source.bad()) throw FormatError(0, "read error");
  const std::size_t n = header.n.value_or(max_id_plus_one);
  return ImportedGraph{UGraph::from_edges(n, edges), std::move(header)};
}

}  // namespace kout
