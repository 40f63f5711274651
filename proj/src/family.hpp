#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "poset.hpp"

namespace subposet {

// Family of subsets of [n] = {1..n}, n <= 64, as bitmasks (element e is
// bit e-1). Members are kept sorted by (popcount, numeric value) with no
// duplicates.
struct SetFamily {
  int ground = 0;
  std::vector<uint64_t> members;

  size_t size() const { return members.size(); }
  uint64_t full_mask() const {
    return ground == 64 ? ~0ULL : ((1ULL << ground) - 1);
  }

  static SetFamily make(int ground, std::vector<uint64_t> members);
};

// Line-oriented family file: required header `n=<int>`, then one member
// per line as `1,3,4`, `empty`, or a 0x-prefixed hex mask; `#` comments.
SetFamily parse_family_text(const std::string& text);
SetFamily load_family_file(const std::string& path);
std::string format_family_text(const SetFamily& f);
void save_family_file(const SetFamily& f, const std::string& path);

// Exact expected size of the intersection with a uniform random maximal
// chain: sum over members of 1/C(n,|F|).
Rat lubell_mass(const SetFamily& f);

// Exact k-th binomial moment of that intersection size: sum over k-chains
// F1 c ... c Fk of |F1|!(|F2|-|F1|)!...(n-|Fk|)!/n!.
Rat chain_moment(const SetFamily& f, int k);

struct ChainStats {
  int k = 1;
  std::optional<Rat> exact;
  double estimate = 0.0;
  double stderr_of_mean = 0.0;
  uint64_t samples = 0;
};

// Monte Carlo estimate of chain_moment via seeded random maximal chains.
// Deterministic for a fixed (seed, samples) independent of thread count.
ChainStats sample_chain_stats(const SetFamily& f, int k, uint64_t samples,
                              uint64_t seed, int threads = 1);

// Containment order of the family (index i < index j iff member i is a
// strict subset of member j).
Poset containment_order(const SetFamily& f);

// Weak containment of the pattern in (F, subseteq); map is pattern
// element -> member index.
std::optional<std::vector<int>> find_pattern_embedding(const SetFamily& f, const Poset& pattern);

// Keeps members with n/2 - 2*sqrt(n ln n) < |F| < n/2 + 2*sqrt(n ln n)
// (strict, real-valued endpoints).
SetFamily trim_middle_band(const SetFamily& f);

}  // namespace subposet
