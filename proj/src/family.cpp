#include "family.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "embedding.hpp"
#include "rng.hpp"

namespace subposet {

namespace {

int popcount(uint64_t mask) { return std::popcount(mask); }

bool canonical_less(uint64_t a, uint64_t b) {
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

}  // namespace

SetFamily SetFamily::make(int ground, std::vector<uint64_t> members) {
  if (ground < 1 || ground > 64)
    throw std::invalid_argument("family ground set must have 1..64 elements");
  SetFamily f;
  f.ground = ground;
  const uint64_t full = f.full_mask();
  for (uint64_t m : members)
    if ((m & ~full) != 0)
      throw std::invalid_argument("family member does not fit in the ground set");
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  f.members = std::move(members);
  return f;
}

SetFamily parse_family_text(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  int ground = -1;
  std::vector<uint64_t> members;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    const size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line[0] == '#') continue;
    if (line.rfind("n=", 0) == 0) {
      if (ground != -1) throw std::invalid_argument("family file: duplicate n= header");
      ground = std::stoi(line.substr(2));
      continue;
    }
    if (ground == -1) throw std::invalid_argument("family file: n= header must come first");
    if (line == "empty") {
      members.push_back(0);
      continue;
    }
    if (line.rfind("0x", 0) == 0 || line.rfind("0X", 0) == 0) {
      members.push_back(std::stoull(line.substr(2), nullptr, 16));
      continue;
    }
    uint64_t mask = 0;
    std::stringstream ls(line);
    std::string item;
    while (std::getline(ls, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("family file: bad element on line " + std::to_string(lineno));
      const int e = std::stoi(item);
      if (e < 1 || e > ground)
        throw std::invalid_argument("family file: element out of range on line " +
                                    std::to_string(lineno));
      mask |= 1ULL << (e - 1);
    }
    members.push_back(mask);
  }
  if (ground == -1) throw std::invalid_argument("family file: missing n= header");
  return SetFamily::make(ground, std::move(members));
}

SetFamily load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_family_text(buf.str());
}

std::string format_family_text(const SetFamily& f) {
  std::string out = "n=" + std::to_string(f.ground) + "\n";
  for (uint64_t m : f.members) {
    if (m == 0) {
      out += "empty\n";
      continue;
    }
    bool first = true;
    for (int e = 0; e < f.ground; ++e) {
      if (m & (1ULL << e)) {
        if (!first) out += ',';
        out += std::to_string(e + 1);
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

void save_family_file(const SetFamily& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write family file: " + path);
  out << format_family_text(f);
}

Rat lubell_mass(const SetFamily& f) {
  const auto row = binomial_row(f.ground);
  Rat total = 0;
  for (uint64_t m : f.members) total += Rat(1, row[popcount(m)]);
  return total;
}

Rat chain_moment(const SetFamily& f, int k) {
  if (k < 1) throw std::invalid_argument("chain moment needs k >= 1");
  if (k == 1) return lubell_mass(f);
  const int n = f.ground;
  const auto fact = factorial_table(n);
  const size_t count = f.members.size();

  // Supersets of each member with strictly larger popcount; members are in
  // canonical order, so successors always sit at larger indices.
  std::vector<std::vector<int>> above(count);
  for (size_t i = 0; i < count; ++i)
    for (size_t j = i + 1; j < count; ++j)
      if ((f.members[i] & f.members[j]) == f.members[i] && f.members[i] != f.members[j])
        above[i].push_back(static_cast<int>(j));

  Rat total = 0;
  std::vector<int> chain;
  auto extend = [&](auto&& self, int last, int depth, const BigInt& partial) -> void {
    if (depth == k) {
      total += Rat(partial * fact[n - popcount(f.members[last])], fact[n]);
      return;
    }
    for (int next : above[last]) {
      const int gap = popcount(f.members[next]) - popcount(f.members[last]);
      self(self, next, depth + 1, partial * fact[gap]);
    }
  };
  for (size_t first = 0; first < count; ++first)
    extend(extend, static_cast<int>(first), 1, fact[popcount(f.members[first])]);
  return total;
}

namespace {

// Members bucketed by popcount and sorted, so a chain prefix of size s is
// looked up by binary search among same-size members only.
struct MemberIndex {
  std::vector<std::vector<uint64_t>> by_size;

  explicit MemberIndex(const SetFamily& f) : by_size(static_cast<size_t>(f.ground) + 1) {
    for (uint64_t m : f.members) by_size[popcount(m)].push_back(m);
    for (auto& bucket : by_size) std::sort(bucket.begin(), bucket.end());
  }

  bool contains(int size, uint64_t mask) const {
    const auto& bucket = by_size[size];
    return std::binary_search(bucket.begin(), bucket.end(), mask);
  }
};

int chain_intersection(const MemberIndex& index, const SetFamily& f,
                       const std::vector<int>& perm) {
  int hits = index.contains(0, 0) ? 1 : 0;
  uint64_t prefix = 0;
  for (int s = 1; s <= f.ground; ++s) {
    prefix |= 1ULL << perm[s - 1];
    if (index.contains(s, prefix)) ++hits;
  }
  return hits;
}

uint64_t falling_binomial(int x, int k) {
  // C(x,k) for x <= 65; the result fits u64, intermediates need 128 bits.
  if (k < 0 || x < k) return 0;
  if (k > x - k) k = x - k;
  unsigned __int128 result = 1;
  for (int i = 0; i < k; ++i)
    result = result * static_cast<unsigned>(x - i) / static_cast<unsigned>(i + 1);
  return static_cast<uint64_t>(result);
}

}  // namespace

ChainStats sample_chain_stats(const SetFamily& f, int k, uint64_t samples, uint64_t seed,
                              int threads) {
  if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
  if (k < 1) throw std::invalid_argument("chain moment needs k >= 1");
  const MemberIndex index(f);

  const int workers = std::max(1, std::min<int>(threads, 64));
  std::vector<BigInt> sums(static_cast<size_t>(workers), 0);
  std::vector<BigInt> squares(static_cast<size_t>(workers), 0);

  auto run_range = [&](int worker, uint64_t begin, uint64_t end) {
    BigInt sum = 0, square = 0;
    for (uint64_t i = begin; i < end; ++i) {
      SplitMix64 rng = substream(seed, i);
      const auto perm = random_permutation(f.ground, rng);
      const uint64_t value = falling_binomial(chain_intersection(index, f, perm), k);
      sum += value;
      square += BigInt(value) * value;
    }
    sums[worker] = std::move(sum);
    squares[worker] = std::move(square);
  };

  if (workers == 1) {
    run_range(0, 0, samples);
  } else {
    std::vector<std::thread> pool;
    const uint64_t chunk = (samples + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const uint64_t begin = std::min<uint64_t>(w * chunk, samples);
      const uint64_t end = std::min<uint64_t>(begin + chunk, samples);
      pool.emplace_back(run_range, w, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  BigInt total = 0, total_sq = 0;
  for (int w = 0; w < workers; ++w) {
    total += sums[w];
    total_sq += squares[w];
  }

  ChainStats stats;
  stats.k = k;
  stats.samples = samples;
  stats.estimate = rat_to_double(Rat(total, BigInt(samples)));
  if (samples > 1) {
    // Unbiased sample variance from exact integer sums.
    const Rat var = (Rat(total_sq) - Rat(total * total, BigInt(samples))) /
                    Rat(BigInt(samples) - 1);
    const double var_d = std::max(0.0, rat_to_double(var));
    stats.stderr_of_mean = std::sqrt(var_d / static_cast<double>(samples));
  }
  return stats;
}

Poset containment_order(const SetFamily& f) {
  std::vector<std::pair<int, int>> rel;
  const int count = static_cast<int>(f.members.size());
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (i == j) continue;
      const uint64_t a = f.members[i], b = f.members[j];
      if (a != b && (a & b) == a) rel.emplace_back(i, j);
    }
  return Poset::from_strict_pairs(count, rel);
}

std::optional<std::vector<int>> find_pattern_embedding(const SetFamily& f,
                                                       const Poset& pattern) {
  const Poset order = containment_order(f);
  auto map = find_subposet_embedding(order, pattern);
  if (!map) return std::nullopt;
  // Re-verify the witness directly under subset containment.
  for (int u = 0; u < pattern.size(); ++u)
    for (int v = 0; v < pattern.size(); ++v)
      if (pattern.less(u, v)) {
        const uint64_t a = f.members[(*map)[u]], b = f.members[(*map)[v]];
        if (a == b || (a & b) != a) return std::nullopt;
      }
  return map;
}

SetFamily trim_middle_band(const SetFamily& f) {
  if (f.ground < 2) throw std::invalid_argument("trim needs n >= 2");
  const double n = static_cast<double>(f.ground);
  const double width = 2.0 * std::sqrt(n * std::log(n));
  const double lo = n / 2.0 - width;
  const double hi = n / 2.0 + width;
  std::vector<uint64_t> kept;
  for (uint64_t m : f.members) {
    const double size = static_cast<double>(popcount(m));
    if (size > lo && size < hi) kept.push_back(m);
  }
  return SetFamily::make(f.ground, std::move(kept));
}

}  // namespace subposet
