#include "graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace subposet {

bool Graph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<uint64_t> Graph::adjacency_masks() const {
  if (vertices > 64) throw std::invalid_argument("graph too large for bitmask adjacency");
  std::vector<uint64_t> adj(static_cast<size_t>(vertices), 0);
  for (auto [a, b] : edges) {
    adj[a] |= (1ULL << b);
    adj[b] |= (1ULL << a);
  }
  return adj;
}

Graph Graph::make(int vertices, std::vector<std::pair<int, int>> edges) {
  if (vertices < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("graph has a loop");
    if (a < 0 || b < 0 || a >= vertices || b >= vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g;
  g.vertices = vertices;
  g.edges = std::move(edges);
  return g;
}

Graph Graph::cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return make(k, std::move(edges));
}

Graph Graph::complete(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return make(k, std::move(edges));
}

Graph Graph::path(int edge_count) {
  if (edge_count < 0) throw std::invalid_argument("negative path length");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < edge_count; ++i) edges.emplace_back(i, i + 1);
  return make(edge_count + 1, std::move(edges));
}

namespace {

int parse_int(const std::string& text, size_t& pos) {
  size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw std::invalid_argument("expected integer in graph literal");
  return std::stoi(text.substr(start, pos - start));
}

}  // namespace

Graph parse_graph_literal(const std::string& text) {
  size_t pos = 0;
  if (text.rfind("v=", 0) != 0) throw std::invalid_argument("graph literal must start with v=");
  pos = 2;
  const int vertices = parse_int(text, pos);
  if (pos >= text.size() || text[pos] != ';')
    throw std::invalid_argument("graph literal: expected ';' after vertex count");
  ++pos;
  if (text.compare(pos, 2, "e=") != 0)
    throw std::invalid_argument("graph literal: expected e= section");
  pos += 2;
  std::vector<std::pair<int, int>> edges;
  while (pos < text.size()) {
    const int a = parse_int(text, pos);
    if (pos >= text.size() || text[pos] != '-')
      throw std::invalid_argument("graph literal: expected '-' in edge");
    ++pos;
    const int b = parse_int(text, pos);
    edges.emplace_back(a, b);
    if (pos < text.size()) {
      if (text[pos] != ',') throw std::invalid_argument("graph literal: expected ','");
      ++pos;
    }
  }
  return Graph::make(vertices, std::move(edges));
}

std::string format_graph_literal(const Graph& g) {
  std::string out = "v=" + std::to_string(g.vertices) + ";e=";
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.edges[i].first) + "-" + std::to_string(g.edges[i].second);
  }
  return out;
}

}  // namespace subposet
