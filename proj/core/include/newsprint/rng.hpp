// Copyright 2026 The Newsprint Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NEWSPRINT_RNG_HPP
#define NEWSPRINT_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace newsprint {

// std::mt19937_64 output is pinned by the standard; the standard
// distributions are not. Everything that must reproduce bit-for-bit
// across platforms maps engine words by hand through these helpers.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent stream seed from (seed, stream index).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  return splitmix64(s);
}

/// Uniform double in [0, 1).
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t word = rng();
  const auto wide = static_cast<unsigned __int128>(word) * span;
  return lo + static_cast<std::int64_t>(wide >> 64);
}

/// Fisher-Yates shuffle with hand-mapped indices.
template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i - 1)));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace newsprint

#endif  // NEWSPRINT_RNG_HPP
