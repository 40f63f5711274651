#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace subposet::detail {

// Backtracking search for an injective map pattern -> host. Shared by
// poset containment, family pattern search, graph subgraph search, and
// the isomorphism test; the callers differ only in their constraints.
//
//   feasible(u, x)            static per-node filter
//   consistent(u, x, v, y)    u->x compatible with already assigned v->y
//
// `order` lists the pattern nodes in assignment order (pinned nodes are
// pre-assigned and excluded from it). Returns the first map found.
template <class Feasible, class Consistent>
std::optional<std::vector<int>> find_injective_map(
    int pattern_size, int host_size, const std::vector<int>& order,
    Feasible&& feasible, Consistent&& consistent,
    const std::vector<std::pair<int, int>>& pins = {}) {
  std::vector<int> map(static_cast<size_t>(pattern_size), -1);
  std::vector<char> used(static_cast<size_t>(host_size), 0);
  std::vector<int> assigned;
  assigned.reserve(static_cast<size_t>(pattern_size));

  auto place = [&](int u, int x) -> bool {
    if (used[x] || !feasible(u, x)) return false;
    for (int v : assigned)
      if (!consistent(u, x, v, map[v])) return false;
    map[u] = x;
    used[x] = 1;
    assigned.push_back(u);
    return true;
  };
  auto unplace = [&](int u) {
    used[map[u]] = 0;
    map[u] = -1;
    assigned.pop_back();
  };

  for (auto [u, x] : pins) {
    if (x < 0 || x >= host_size || !place(u, x)) return std::nullopt;
  }

  auto extend = [&](auto&& self, size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int x = 0; x < host_size; ++x) {
      if (!place(u, x)) continue;
      if (self(self, depth + 1)) return true;
      unplace(u);
    }
    return false;
  };

  if (extend(extend, 0)) return map;
  return std::nullopt;
}

}  // namespace subposet::detail
