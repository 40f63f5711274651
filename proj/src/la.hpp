#pragma once

#include <cstdint>
#include <limits>

#include "family.hpp"
#include "poset.hpp"

namespace subposet {

struct SearchBudget {
  uint64_t max_nodes = std::numeric_limits<uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
  // Halves root branching by identifying a family with its complement
  // image. Only sound when freeness of the forbidden pattern is preserved
  // under complementation (self-dual patterns); off by default.
  bool complement_symmetry = false;
};

enum class SearchStatus { Exact, LowerBound };

struct LaResult {
  uint64_t value = 0;
  SetFamily witness;
  SearchStatus status = SearchStatus::Exact;
  uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

// Largest pattern-free family of subsets of [n], by include/exclude DFS
// over subsets in canonical order (nearest the middle level first) with
// incremental freeness checking. Returns the best family found with
// status LowerBound if the budget ran out first.
LaResult la_exact(int n, const Poset& pattern, const SearchBudget& budget = {});

// Union of the m levels nearest n/2 (ties resolved downward).
SetFamily middle_levels(int n, int m);

// Largest m for which the middle m levels avoid the pattern.
int max_free_middle_levels(int n, const Poset& pattern);

}  // namespace subposet
