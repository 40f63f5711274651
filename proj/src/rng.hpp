#pragma once

#include <cstdint>
#include <vector>

namespace subposet {

// splitmix64: tiny, portable, and identical on every platform, which the
// reproducibility contract needs (std::uniform_int_distribution is not).
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) via Lemire rejection; exact uniformity.
  uint64_t bounded(uint64_t bound) {
    if (bound <= 1) return 0;
    const uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

// Independent substream for sample index i of a seeded run. Mixing the
// index through the same finalizer decorrelates neighbouring indices, so
// results do not depend on how samples are partitioned across workers.
inline SplitMix64 substream(uint64_t seed, uint64_t index) {
  SplitMix64 mixer(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
  return SplitMix64(mixer.next());
}

// Fisher-Yates shuffle of 0..n-1 driven by the given stream.
inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.bounded(static_cast<uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace subposet
