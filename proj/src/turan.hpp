#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace subposet {

// Exact chromatic number by iterative-deepening backtracking; intended
// for graphs up to ~20 vertices.
int chromatic_number(const Graph& g);

// Injective map pattern -> host preserving edges (non-induced). The pin,
// when given, forces one pattern edge onto one host edge (either way).
std::optional<std::vector<int>> find_subgraph_embedding(const Graph& host,
                                                        const Graph& pattern);

struct TuranBudget {
  uint64_t max_nodes = std::numeric_limits<uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
};

struct TuranResult {
  int vertices = 0;
  uint64_t value = 0;
  std::vector<std::pair<int, int>> witness_edges;
  bool exact = true;
  uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

// Maximum edge count of a graph on nv vertices containing no copy of the
// pattern; include/exclude branch and bound over edges in lexicographic
// order with incremental containment checks.
TuranResult turan_exact(int nv, const Graph& pattern, const TuranBudget& budget = {});

// Leading term of the extremal edge count: (1 - 1/(chi-1)) * nv^2 / 2.
// Zero for bipartite patterns, where the true count is o(nv^2).
struct EssValue {
  double value = 0.0;
  int chi = 0;
  bool bipartite_note = false;
};
EssValue ess_leading_term(long long nv, const Graph& pattern);

}  // namespace subposet
