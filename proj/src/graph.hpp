#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace subposet {

// Simple undirected graph on vertices 0..v-1. Edges are normalized to
// (a,b) with a < b, sorted, duplicate-free.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool adjacent(int a, int b) const;

  // Adjacency bitmasks; requires vertices <= 64.
  std::vector<uint64_t> adjacency_masks() const;

  static Graph make(int vertices, std::vector<std::pair<int, int>> edges);
  static Graph cycle(int k);
  static Graph complete(int k);
  static Graph path(int edge_count);
};

// Literal format shared by the poset DSL and the turan CLI:
//   v=<n>;e=<a>-<b>(,<a>-<b>)*      (e= part may be empty: "v=4;e=")
Graph parse_graph_literal(const std::string& text);
std::string format_graph_literal(const Graph& g);

}  // namespace subposet
