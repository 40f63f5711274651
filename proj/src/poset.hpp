#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace subposet {

// Finite poset stored as its strict order relation (irreflexive,
// transitively closed). Reflexivity is implicit everywhere; keeping only
// the strict part avoids off-by-one mistakes in chain counting.
class Poset {
 public:
  Poset() = default;

  // Builds from arbitrary strict pairs a<b: closes transitively and
  // rejects cyclic input.
  static Poset from_strict_pairs(int size, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return size_; }
  bool less(int a, int b) const { return word(a, b) & bit(b); }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  int up_count(int a) const { return up_count_[a]; }
  int down_count(int a) const { return down_count_[a]; }
  int degree(int a) const { return up_count_[a] + down_count_[a]; }

  // Cover relations (a,b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> cover_pairs() const;
  std::vector<std::pair<int, int>> strict_pairs() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
  std::string label(int a) const;

 private:
  uint64_t word(int a, int b) const { return bits_[static_cast<size_t>(a) * words_ + b / 64]; }
  static uint64_t bit(int b) { return 1ULL << (b % 64); }

  int size_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;  // row-major strict-order matrix
  std::vector<int> up_count_;
  std::vector<int> down_count_;
  std::vector<std::string> labels_;
};

// ---- constructions ---------------------------------------------------

Poset chain_poset(int k);               // total order on k elements
Poset fork_poset(int tines);            // one bottom below r incomparable tops
Poset kfork_poset(int shaft, int tines);  // chain of `shaft` below r tops
Poset baton_poset(int k, int s, int t);   // k-chain, bottom s-fold, top t-fold
Poset complete_two_level_poset(int bottoms, int tops);
Poset butterfly_poset();
Poset n_poset();
Poset diamond_poset();
Poset crown_poset(int cycle_length);    // height-2 poset on a 2k-cycle
Poset boolean_lattice_poset(int ground);
Poset poset_of_graph(const Graph& g);   // vertices below their incident edges
Poset up_down_tree_poset(const Graph& tree);  // 2-coloured tree, class of vertex 0 at the bottom

// Poset-spec DSL: `name[:int{,int}*]`, with `pg:`/`tree:` taking a graph
// literal tail (see parse_graph_literal).
Poset build_poset(const std::string& spec);

// Cover-relation file: one `a<b` pair per line, nonnegative integers.
Poset poset_from_cover_text(const std::string& text);

// ---- operations ------------------------------------------------------

// Largest chain cardinality (0 for the empty poset).
int height(const Poset& p);

// Weak subposet containment: injective f with u <' v  =>  f(u) < f(v).
// Extra comparabilities in the host are allowed. Optionally pins one
// pattern element to a fixed host element.
std::optional<std::vector<int>> find_subposet_embedding(
    const Poset& host, const Poset& pattern,
    std::optional<std::pair<int, int>> pin = std::nullopt);

bool verify_embedding(const Poset& host, const Poset& pattern, const std::vector<int>& map);

// Height <= 2 and the comparability graph is connected and acyclic.
bool is_up_down_tree(const Poset& p);

// Exact isomorphism via permutation search with degree-profile pruning.
bool are_isomorphic(const Poset& a, const Poset& b);

}  // namespace subposet
