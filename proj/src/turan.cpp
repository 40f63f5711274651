#include "turan.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "embedding.hpp"

namespace subposet {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(static_cast<size_t>(g.vertices), 0);
  for (auto [a, b] : g.edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool colourable(const std::vector<uint64_t>& adj, const std::vector<int>& order, int colours) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> colour(static_cast<size_t>(n), -1);
  auto assign = [&](auto&& self, int idx, int used) -> bool {
    if (idx == n) return true;
    const int v = order[idx];
    // Allowing one fresh colour per step breaks colour-permutation symmetry.
    const int limit = std::min(colours, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      uint64_t nb = adj[v];
      while (nb) {
        const int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (colour[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colour[v] = c;
      if (self(self, idx + 1, std::max(used, c + 1))) return true;
      colour[v] = -1;
    }
    return false;
  };
  return assign(assign, 0, 0);
}

int greedy_clique_size(const std::vector<uint64_t>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(adj[a]) > std::popcount(adj[b]);
  });
  uint64_t clique = 0;
  int size = 0;
  for (int v : order) {
    if ((clique & ~adj[v]) == 0) {
      clique |= 1ULL << v;
      ++size;
    }
  }
  return size;
}

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.vertices < 1) throw std::invalid_argument("chromatic number needs >= 1 vertex");
  if (g.edge_count() == 0) return 1;
  const auto adj = g.adjacency_masks();
  std::vector<int> order(static_cast<size_t>(g.vertices));
  std::iota(order.begin(), order.end(), 0);
  const auto deg = degree_sequence(g);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  for (int k = greedy_clique_size(adj); k <= g.vertices; ++k)
    if (colourable(adj, order, k)) return k;
  return g.vertices;
}

std::optional<std::vector<int>> find_subgraph_embedding(const Graph& host,
                                                        const Graph& pattern) {
  if (pattern.vertices > host.vertices) return std::nullopt;
  const auto host_deg = degree_sequence(host);
  const auto pat_deg = degree_sequence(pattern);
  const auto host_adj = host.adjacency_masks();
  const auto pat_adj = pattern.adjacency_masks();
  std::vector<int> order(static_cast<size_t>(pattern.vertices));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pat_deg[a] > pat_deg[b]; });
  auto feasible = [&](int u, int x) { return pat_deg[u] <= host_deg[x]; };
  auto consistent = [&](int u, int x, int v, int y) {
    if (pat_adj[u] & (1ULL << v)) return (host_adj[x] & (1ULL << y)) != 0;
    return true;
  };
  return detail::find_injective_map(pattern.vertices, host.vertices, order, feasible,
                                    consistent);
}

namespace {

// Branch-and-bound state for the extremal edge count.
class EdgeSearcher {
 public:
  EdgeSearcher(int nv, const Graph& pattern, const TuranBudget& budget)
      : nv_(nv), pattern_(pattern), budget_(budget), start_(Clock::now()) {
    for (int a = 0; a < nv; ++a)
      for (int b = a + 1; b < nv; ++b) all_edges_.emplace_back(a, b);
    adj_.assign(static_cast<size_t>(nv), 0);
    pat_adj_ = pattern.adjacency_masks();
    pat_deg_ = degree_sequence(pattern);
    for (auto [pu, pv] : pattern.edges) {
      std::vector<int> order;
      for (int u = 0; u < pattern.vertices; ++u)
        if (u != pu && u != pv) order.push_back(u);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return pat_deg_[a] > pat_deg_[b]; });
      edge_orders_.push_back(std::move(order));
    }
  }

  void seed_incumbent(const std::vector<std::pair<int, int>>& edges) {
    best_ = edges.size();
    best_edges_ = edges;
  }

  TuranResult run() {
    dfs(0);
    TuranResult result;
    result.vertices = nv_;
    result.value = best_;
    result.witness_edges = best_edges_;
    result.exact = !stopped_;
    result.nodes = nodes_;
    result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return result;
  }

 private:
  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    return std::chrono::duration<double>(Clock::now() - start_).count() > budget_.max_seconds;
  }

  // Does some copy of the pattern use the newly added edge (a,b)?
  bool creates_pattern(int a, int b) {
    std::vector<int> host_deg(static_cast<size_t>(nv_));
    for (int v = 0; v < nv_; ++v) host_deg[v] = std::popcount(adj_[v]);
    auto feasible = [&](int u, int x) { return pat_deg_[u] <= host_deg[x]; };
    auto consistent = [&](int u, int x, int v, int y) {
      if (pat_adj_[u] & (1ULL << v)) return (adj_[x] & (1ULL << y)) != 0;
      return true;
    };
    for (auto [pu, pv] : pattern_.edges) {
      for (int flip = 0; flip < 2; ++flip) {
        const int xu = flip ? b : a;
        const int xv = flip ? a : b;
        std::vector<int> order;
        for (int u = 0; u < pattern_.vertices; ++u)
          if (u != pu && u != pv) order.push_back(u);
        std::stable_sort(order.begin(), order.end(),
                         [&](int s, int t) { return pat_deg_[s] > pat_deg_[t]; });
        if (detail::find_injective_map(pattern_.vertices, nv_, order, feasible, consistent,
                                       {{pu, xu}, {pv, xv}}))
          return true;
      }
    }
    return false;
  }

  void dfs(size_t index) {
    if (stopped_) return;
    if ((++nodes_ & 4095) == 0 && out_of_budget()) {
      stopped_ = true;
      return;
    }
    if (current_.size() + (all_edges_.size() - index) <= best_) return;
    if (index == all_edges_.size()) return;

    const auto [a, b] = all_edges_[index];
    adj_[a] |= 1ULL << b;
    adj_[b] |= 1ULL << a;
    current_.push_back(all_edges_[index]);
    if (!creates_pattern(a, b)) {
      if (current_.size() > best_) {
        best_ = current_.size();
        best_edges_ = current_;
      }
      dfs(index + 1);
    }
    adj_[a] &= ~(1ULL << b);
    adj_[b] &= ~(1ULL << a);
    current_.pop_back();
    if (stopped_) return;

    dfs(index + 1);
  }

  int nv_;
  const Graph& pattern_;
  TuranBudget budget_;
  Clock::time_point start_;
  std::vector<std::pair<int, int>> all_edges_;
  std::vector<uint64_t> adj_;
  std::vector<uint64_t> pat_adj_;
  std::vector<int> pat_deg_;
  std::vector<std::vector<int>> pat_order_;

  std::vector<std::pair<int, int>> current_;
  uint64_t best_ = 0;
  std::vector<std::pair<int, int>> best_edges_;
  uint64_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

TuranResult turan_exact(int nv, const Graph& pattern, const TuranBudget& budget) {
  if (nv < 1 || nv > 64) throw std::invalid_argument("turan_exact needs 1 <= nv <= 64");
  if (pattern.edge_count() < 1)
    throw std::invalid_argument("turan_exact needs a nonempty pattern");
  EdgeSearcher searcher(nv, pattern, budget);

  // Warm start: the balanced complete bipartite graph, when it is itself
  // pattern-free, gives the search a strong incumbent immediately.
  {
    const int half = nv / 2;
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < half; ++a)
      for (int b = half; b < nv; ++b) edges.emplace_back(a, b);
    Graph candidate = Graph::make(nv, edges);
    if (!find_subgraph_embedding(candidate, pattern))
      searcher.seed_incumbent(candidate.edges);
  }

  TuranResult result = searcher.run();
  // Independent re-verification of the witness.
  Graph witness = Graph::make(nv, result.witness_edges);
  if (find_subgraph_embedding(witness, pattern))
    throw std::logic_error("turan_exact produced a witness containing the pattern");
  return result;
}

EssValue ess_leading_term(long long nv, const Graph& pattern) {
  if (pattern.edge_count() < 1)
    throw std::invalid_argument("leading term needs a nonempty pattern");
  EssValue result;
  result.chi = chromatic_number(pattern);
  if (result.chi == 2) {
    result.value = 0.0;
    result.bipartite_note = true;
    return result;
  }
  const double n = static_cast<double>(nv);
  result.value = (1.0 - 1.0 / (result.chi - 1)) * n * n / 2.0;
  return result;
}

}  // namespace subposet
