#pragma once

#include <cstdint>
#include <vector>

namespace fairdiv {

// splitmix64: tiny, portable, counter-friendly. All randomness in the engine
// flows through this so identical seeds give byte-identical runs everywhere.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw in [0, bound); bound is tiny relative to 2^64.
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
};

// Independent stream per (seed, counter) pair, for reproducible trials.
inline SplitMix64 stream(std::uint64_t seed, std::uint64_t counter) {
  SplitMix64 mix(seed ^ (0x5851f42d4c957f2dULL * (counter + 1)));
  mix.next();
  return mix;
}

inline bool is_permutation_of(int n, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace fairdiv
