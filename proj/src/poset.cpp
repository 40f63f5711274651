#include "poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "embedding.hpp"

namespace subposet {

Poset Poset::from_strict_pairs(int size, const std::vector<std::pair<int, int>>& pairs) {
  if (size < 0) throw std::invalid_argument("poset size must be nonnegative");
  Poset p;
  p.size_ = size;
  p.words_ = (size + 63) / 64;
  p.bits_.assign(static_cast<size_t>(size) * p.words_, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= size || b >= size)
      throw std::invalid_argument("relation element out of range");
    if (a == b) throw std::invalid_argument("relation is not irreflexive");
    p.bits_[static_cast<size_t>(a) * p.words_ + b / 64] |= bit(b);
  }
  // Warshall closure on bitset rows.
  for (int k = 0; k < size; ++k) {
    uint64_t* krow = &p.bits_[static_cast<size_t>(k) * p.words_];
    for (int i = 0; i < size; ++i) {
      if (!(p.bits_[static_cast<size_t>(i) * p.words_ + k / 64] & bit(k))) continue;
      uint64_t* irow = &p.bits_[static_cast<size_t>(i) * p.words_];
      for (int w = 0; w < p.words_; ++w) irow[w] |= krow[w];
    }
  }
  for (int i = 0; i < size; ++i)
    if (p.less(i, i)) throw std::invalid_argument("relation has a cycle");

  p.up_count_.assign(static_cast<size_t>(size), 0);
  p.down_count_.assign(static_cast<size_t>(size), 0);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (p.less(i, j)) {
        ++p.up_count_[i];
        ++p.down_count_[j];
      }
  return p;
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) {
      if (!less(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < size_ && covered; ++c)
        if (less(a, c) && less(c, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

std::string Poset::label(int a) const {
  if (a >= 0 && a < static_cast<int>(labels_.size()) && !labels_[a].empty()) return labels_[a];
  return std::to_string(a);
}

// ---- constructions ---------------------------------------------------

Poset chain_poset(int k) {
  if (k < 1) throw std::invalid_argument("chain needs k >= 1");
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < k; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_strict_pairs(k, rel);
}

Poset fork_poset(int tines) {
  if (tines < 1) throw std::invalid_argument("fork needs r >= 1");
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i <= tines; ++i) rel.emplace_back(0, i);
  return Poset::from_strict_pairs(tines + 1, rel);
}

Poset kfork_poset(int shaft, int tines) {
  if (shaft < 1 || tines < 1) throw std::invalid_argument("kfork needs k,r >= 1");
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < shaft; ++i) rel.emplace_back(i, i + 1);
  for (int i = 0; i < tines; ++i) rel.emplace_back(shaft - 1, shaft + i);
  return Poset::from_strict_pairs(shaft + tines, rel);
}

Poset baton_poset(int k, int s, int t) {
  if (k < 3) throw std::invalid_argument("baton needs k >= 3");
  if (s < 1 || t < 1) throw std::invalid_argument("baton needs s,t >= 1");
  // s bottoms, then the k-2 interior chain, then t tops.
  const int interior = k - 2;
  const int size = s + interior + t;
  std::vector<std::pair<int, int>> rel;
  for (int b = 0; b < s; ++b) rel.emplace_back(b, s);
  for (int i = 0; i + 1 < interior; ++i) rel.emplace_back(s + i, s + i + 1);
  for (int u = 0; u < t; ++u) rel.emplace_back(s + interior - 1, s + interior + u);
  return Poset::from_strict_pairs(size, rel);
}

Poset complete_two_level_poset(int bottoms, int tops) {
  if (bottoms < 1 || tops < 1) throw std::invalid_argument("krs needs r,s >= 1");
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < bottoms; ++a)
    for (int b = 0; b < tops; ++b) rel.emplace_back(a, bottoms + b);
  return Poset::from_strict_pairs(bottoms + tops, rel);
}

Poset butterfly_poset() { return complete_two_level_poset(2, 2); }

Poset n_poset() {
  // A < B, C < B, C < D
  return Poset::from_strict_pairs(4, {{0, 1}, {2, 1}, {2, 3}});
}

Poset diamond_poset() {
  return Poset::from_strict_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

Poset crown_poset(int cycle_length) {
  if (cycle_length < 4 || cycle_length % 2 != 0)
    throw std::invalid_argument("crown needs an even argument >= 4");
  const int k = cycle_length / 2;  // k bottoms, k tops
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < k; ++i) {
    rel.emplace_back(i, k + i);
    rel.emplace_back((i + 1) % k, k + i);
  }
  return Poset::from_strict_pairs(2 * k, rel);
}

Poset boolean_lattice_poset(int ground) {
  if (ground < 0 || ground > 16) throw std::invalid_argument("boolean lattice limited to m <= 16");
  const int size = 1 << ground;
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (a != b && (a & b) == a) rel.emplace_back(a, b);
  Poset p = Poset::from_strict_pairs(size, rel);
  std::vector<std::string> labels(static_cast<size_t>(size));
  for (int a = 0; a < size; ++a) {
    std::string text = "{";
    for (int e = 0; e < ground; ++e)
      if (a & (1 << e)) text += std::to_string(e + 1) + ",";
    if (text.back() == ',') text.pop_back();
    text += "}";
    labels[a] = text;
  }
  p.set_labels(std::move(labels));
  return p;
}

Poset poset_of_graph(const Graph& g) {
  const int v = g.vertices;
  std::vector<std::pair<int, int>> rel;
  for (int e = 0; e < g.edge_count(); ++e) {
    rel.emplace_back(g.edges[e].first, v + e);
    rel.emplace_back(g.edges[e].second, v + e);
  }
  Poset p = Poset::from_strict_pairs(v + g.edge_count(), rel);
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(v) + g.edges.size());
  for (int i = 0; i < v; ++i) labels.push_back("v" + std::to_string(i));
  for (auto [a, b] : g.edges)
    labels.push_back("e" + std::to_string(a) + "-" + std::to_string(b));
  p.set_labels(std::move(labels));
  return p;
}

Poset up_down_tree_poset(const Graph& tree) {
  const int v = tree.vertices;
  if (v == 0) throw std::invalid_argument("tree must be nonempty");
  if (tree.edge_count() != v - 1) throw std::invalid_argument("graph is not a tree");
  // 2-colour by BFS; a tree's bipartition is unique up to a swap, and the
  // class containing vertex 0 is taken as the bottom level.
  std::vector<int> colour(static_cast<size_t>(v), -1);
  std::vector<int> queue = {0};
  colour[0] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int a = queue[head];
    for (auto [x, y] : tree.edges) {
      const int b = (x == a) ? y : (y == a ? x : -1);
      if (b < 0) continue;
      if (colour[b] == -1) {
        colour[b] = 1 - colour[a];
        queue.push_back(b);
      }
    }
  }
  if (queue.size() != static_cast<size_t>(v))
    throw std::invalid_argument("graph is not a tree (disconnected)");
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : tree.edges) {
    if (colour[a] == 0)
      rel.emplace_back(a, b);
    else
      rel.emplace_back(b, a);
  }
  return Poset::from_strict_pairs(v, rel);
}

// ---- DSL -------------------------------------------------------------

namespace {

std::vector<int> parse_int_args(const std::string& args, size_t expected) {
  std::vector<int> out;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("poset spec: bad integer parameter '" + item + "'");
    out.push_back(std::stoi(item));
  }
  if (out.size() != expected)
    throw std::invalid_argument("poset spec: wrong number of parameters");
  return out;
}

}  // namespace

Poset build_poset(const std::string& spec) {
  const size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args = (colon == std::string::npos) ? "" : spec.substr(colon + 1);

  if (name == "chain") return chain_poset(parse_int_args(args, 1)[0]);
  if (name == "fork") return fork_poset(parse_int_args(args, 1)[0]);
  if (name == "kfork") {
    auto a = parse_int_args(args, 2);
    return kfork_poset(a[0], a[1]);
  }
  if (name == "baton") {
    auto a = parse_int_args(args, 3);
    return baton_poset(a[0], a[1], a[2]);
  }
  if (name == "krs") {
    auto a = parse_int_args(args, 2);
    return complete_two_level_poset(a[0], a[1]);
  }
  if (name == "butterfly") {
    if (!args.empty()) throw std::invalid_argument("butterfly takes no parameters");
    return butterfly_poset();
  }
  if (name == "nposet") {
    if (!args.empty()) throw std::invalid_argument("nposet takes no parameters");
    return n_poset();
  }
  if (name == "diamond") {
    if (!args.empty()) throw std::invalid_argument("diamond takes no parameters");
    return diamond_poset();
  }
  if (name == "crown") return crown_poset(parse_int_args(args, 1)[0]);
  if (name == "boolean") return boolean_lattice_poset(parse_int_args(args, 1)[0]);
  if (name == "pg") return poset_of_graph(parse_graph_literal(args));
  if (name == "tree") return up_down_tree_poset(parse_graph_literal(args));
  throw std::invalid_argument("unknown poset spec '" + name + "'");
}

Poset poset_from_cover_text(const std::string& text) {
  std::vector<std::pair<int, int>> rel;
  int max_elem = -1;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line[0] == '#') continue;
    const size_t lt = line.find('<');
    if (lt == std::string::npos) throw std::invalid_argument("cover file: expected a<b");
    const int a = std::stoi(line.substr(0, lt));
    const int b = std::stoi(line.substr(lt + 1));
    if (a < 0 || b < 0) throw std::invalid_argument("cover file: negative element");
    rel.emplace_back(a, b);
    max_elem = std::max({max_elem, a, b});
  }
  return Poset::from_strict_pairs(max_elem + 1, rel);
}

// ---- operations ------------------------------------------------------

int height(const Poset& p) {
  const int n = p.size();
  if (n == 0) return 0;
  std::vector<int> depth(static_cast<size_t>(n), -1);
  auto longest_up = [&](auto&& self, int a) -> int {
    if (depth[a] >= 0) return depth[a];
    int best = 1;
    for (int b = 0; b < n; ++b)
      if (p.less(a, b)) best = std::max(best, 1 + self(self, b));
    return depth[a] = best;
  };
  int best = 0;
  for (int a = 0; a < n; ++a) best = std::max(best, longest_up(longest_up, a));
  return best;
}

namespace {

std::vector<int> degree_order(const Poset& pattern, int skip = -1) {
  std::vector<int> order;
  for (int u = 0; u < pattern.size(); ++u)
    if (u != skip) order.push_back(u);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pattern.degree(a) > pattern.degree(b);
  });
  return order;
}

}  // namespace

std::optional<std::vector<int>> find_subposet_embedding(
    const Poset& host, const Poset& pattern, std::optional<std::pair<int, int>> pin) {
  if (pattern.size() > host.size()) return std::nullopt;
  auto feasible = [&](int u, int x) {
    return pattern.up_count(u) <= host.up_count(x) &&
           pattern.down_count(u) <= host.down_count(x);
  };
  auto consistent = [&](int u, int x, int v, int y) {
    if (pattern.less(u, v) && !host.less(x, y)) return false;
    if (pattern.less(v, u) && !host.less(y, x)) return false;
    return true;
  };
  std::vector<std::pair<int, int>> pins;
  int skip = -1;
  if (pin) {
    pins.push_back(*pin);
    skip = pin->first;
  }
  auto result = detail::find_injective_map(pattern.size(), host.size(),
                                           degree_order(pattern, skip), feasible,
                                           consistent, pins);
  if (result && !verify_embedding(host, pattern, *result)) return std::nullopt;
  return result;
}

bool verify_embedding(const Poset& host, const Poset& pattern, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != pattern.size()) return false;
  std::vector<char> seen(static_cast<size_t>(host.size()), 0);
  for (int x : map) {
    if (x < 0 || x >= host.size() || seen[x]) return false;
    seen[x] = 1;
  }
  for (int u = 0; u < pattern.size(); ++u)
    for (int v = 0; v < pattern.size(); ++v)
      if (pattern.less(u, v) && !host.less(map[u], map[v])) return false;
  return true;
}

bool is_up_down_tree(const Poset& p) {
  const int n = p.size();
  if (n == 0) return false;
  if (height(p) > 2) return false;
  // Height <= 2, so comparability edges need no transitivity care.
  auto pairs = p.strict_pairs();
  if (static_cast<int>(pairs.size()) != n - 1) return false;  // tree edge count
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int components = n;
  for (auto [a, b] : pairs) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;  // cycle
    parent[ra] = rb;
    --components;
  }
  return components == 1;
}

bool are_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  // Quick profile check.
  auto profile = [](const Poset& p) {
    std::vector<std::pair<int, int>> prof;
    for (int i = 0; i < p.size(); ++i) prof.emplace_back(p.up_count(i), p.down_count(i));
    std::sort(prof.begin(), prof.end());
    return prof;
  };
  if (profile(a) != profile(b)) return false;
  auto feasible = [&](int u, int x) {
    return a.up_count(u) == b.up_count(x) && a.down_count(u) == b.down_count(x);
  };
  auto consistent = [&](int u, int x, int v, int y) {
    return a.less(u, v) == b.less(x, y) && a.less(v, u) == b.less(y, x);
  };
  return detail::find_injective_map(a.size(), b.size(), degree_order(a), feasible,
                                    consistent)
      .has_value();
}

}  // namespace subposet
