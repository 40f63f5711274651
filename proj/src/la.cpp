#include "la.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "embedding.hpp"

namespace subposet {

namespace {

using Clock = std::chrono::steady_clock;

struct PatternData {
  const Poset& poset;
  std::vector<int> order_without;  // per pinned element: assignment order of the rest

  explicit PatternData(const Poset& p) : poset(p) {}
};

// DFS state over the universe of all subsets of [n] in canonical order.
class Searcher {
 public:
  Searcher(int n, const Poset& pattern, const SearchBudget& budget)
      : n_(n), pattern_(pattern), budget_(budget), start_(Clock::now()) {
    const uint64_t total = (n == 64) ? 0 : (1ULL << n);  // n <= 5 in practice
    universe_.reserve(total);
    for (uint64_t m = 0; m < total; ++m) universe_.push_back(m);
    std::sort(universe_.begin(), universe_.end(), [n](uint64_t a, uint64_t b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      const int da = std::abs(2 * pa - n), db = std::abs(2 * pb - n);
      if (da != db) return da < db;
      if (pa != pb) return pa < pb;
      return a < b;
    });
    pattern_order_.resize(static_cast<size_t>(pattern.size()));
    for (int pin = 0; pin < pattern.size(); ++pin) {
      std::vector<int> order;
      for (int u = 0; u < pattern.size(); ++u)
        if (u != pin) order.push_back(u);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pattern.degree(a) > pattern.degree(b);
      });
      pattern_order_[pin] = std::move(order);
    }
  }

  LaResult run() {
    dfs(0);
    LaResult result;
    result.value = best_;
    result.witness = SetFamily::make(n_, best_members_);
    result.status = stopped_ ? SearchStatus::LowerBound : SearchStatus::Exact;
    result.nodes = nodes_;
    result.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start_).count();
    return result;
  }

 private:
  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    // Wall clock is polled on the same cadence as the node check.
    return std::chrono::duration<double>(Clock::now() - start_).count() >
           budget_.max_seconds;
  }

  void push_member(uint64_t mask) {
    int up = 0, down = 0;
    for (size_t i = 0; i < members_.size(); ++i) {
      const uint64_t other = members_[i];
      if (other != mask && (other & mask) == other) {
        ++up_count_[i];
        ++down;
      } else if (other != mask && (other & mask) == mask) {
        ++down_count_[i];
        ++up;
      }
    }
    members_.push_back(mask);
    up_count_.push_back(up);
    down_count_.push_back(down);
  }

  void pop_member() {
    const uint64_t mask = members_.back();
    members_.pop_back();
    up_count_.pop_back();
    down_count_.pop_back();
    for (size_t i = 0; i < members_.size(); ++i) {
      const uint64_t other = members_[i];
      if (other != mask && (other & mask) == other)
        --up_count_[i];
      else if (other != mask && (other & mask) == mask)
        --down_count_[i];
    }
  }

  // Any embedding created by the newest member must use it; freeness of
  // the previous family makes the check hereditary.
  bool creates_pattern() {
    const int newest = static_cast<int>(members_.size()) - 1;
    auto feasible = [&](int u, int x) {
      return pattern_.up_count(u) <= up_count_[x] &&
             pattern_.down_count(u) <= down_count_[x];
    };
    auto consistent = [&](int u, int x, int v, int y) {
      const uint64_t a = members_[x], b = members_[y];
      if (pattern_.less(u, v) && !(a != b && (a & b) == a)) return false;
      if (pattern_.less(v, u) && !(a != b && (a & b) == b)) return false;
      return true;
    };
    for (int pin = 0; pin < pattern_.size(); ++pin) {
      if (detail::find_injective_map(pattern_.size(),
                                     static_cast<int>(members_.size()),
                                     pattern_order_[pin], feasible, consistent,
                                     {{pin, newest}}))
        return true;
    }
    return false;
  }

  void dfs(size_t index) {
    if (stopped_) return;
    if ((++nodes_ & 4095) == 0 && out_of_budget()) {
      stopped_ = true;
      return;
    }
    if (members_.size() + (universe_.size() - index) <= best_) return;
    if (index == universe_.size()) return;

    const uint64_t mask = universe_[index];
    if (mask != banned_) {
      push_member(mask);
      if (!creates_pattern()) {
        if (members_.size() > best_) {
          best_ = members_.size();
          best_members_ = members_;
        }
        dfs(index + 1);
      }
      pop_member();
      if (stopped_) return;
    }

    // Exclude branch. Under complement symmetry, a family avoiding the
    // first subset can be reflected so that its complement is avoided too.
    const uint64_t full = (n_ == 64) ? ~0ULL : ((1ULL << n_) - 1);
    if (budget_.complement_symmetry && index == 0) banned_ = ~mask & full;
    dfs(index + 1);
    if (budget_.complement_symmetry && index == 0) banned_ = kNoBan;
  }

  static constexpr uint64_t kNoBan = ~0ULL;

  int n_;
  const Poset& pattern_;
  SearchBudget budget_;
  Clock::time_point start_;
  std::vector<uint64_t> universe_;
  std::vector<std::vector<int>> pattern_order_;

  std::vector<uint64_t> members_;
  std::vector<int> up_count_;
  std::vector<int> down_count_;
  uint64_t best_ = 0;
  std::vector<uint64_t> best_members_;
  uint64_t nodes_ = 0;
  bool stopped_ = false;
  uint64_t banned_ = kNoBan;
};

}  // namespace

LaResult la_exact(int n, const Poset& pattern, const SearchBudget& budget) {
  if (n < 1 || n > 64) throw std::invalid_argument("la_exact needs 1 <= n <= 64");
  if (n > 25) throw std::invalid_argument("la_exact universe 2^n is too large beyond n = 25");
  if (pattern.size() == 0) throw std::invalid_argument("forbidden pattern must be nonempty");
  Searcher searcher(n, pattern, budget);
  LaResult result = searcher.run();
  if (find_pattern_embedding(result.witness, pattern))
    throw std::logic_error("la_exact produced a witness containing the pattern");
  return result;
}

SetFamily middle_levels(int n, int m) {
  if (n < 1 || n > 64) throw std::invalid_argument("middle_levels needs 1 <= n <= 64");
  if (m < 1 || m > n + 1) throw std::invalid_argument("middle_levels needs 1 <= m <= n+1");
  const int lo = (n - m + 1) / 2;
  const int hi = (n + m - 1) / 2;
  std::vector<uint64_t> members;
  for (int level = lo; level <= hi; ++level) {
    if (level == 0) {
      members.push_back(0);
      continue;
    }
    // Gosper's hack: walk the level in increasing mask order.
    const uint64_t lowest = (level == 64) ? ~0ULL : ((1ULL << level) - 1);
    const uint64_t highest = lowest << (n - level);
    uint64_t mask = lowest;
    for (;;) {
      members.push_back(mask);
      if (mask == highest) break;
      const uint64_t low_bit = mask & (~mask + 1);
      const uint64_t ripple = mask + low_bit;
      mask = (((mask ^ ripple) >> 2) / low_bit) | ripple;
    }
  }
  return SetFamily::make(n, std::move(members));
}

int max_free_middle_levels(int n, const Poset& pattern) {
  int best = 0;
  for (int m = 1; m <= n + 1; ++m) {
    const SetFamily family = middle_levels(n, m);
    if (find_pattern_embedding(family, pattern)) break;
    best = m;
  }
  return best;
}

}  // namespace subposet
