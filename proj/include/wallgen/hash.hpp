#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>

namespace wallgen {

using EdgeColor = std::int32_t;

// Independent hash streams, one per lattice entity kind.
enum class StreamTag : std::uint8_t {
  HEdge = 0,
  VEdge = 1,
  SolverChoice = 2,
  BrickColor = 3,
};

struct WallParams {
  int n_colors = 3;                 // edge colors, >= 3
  std::optional<int> max_run = {};  // longest same-orientation run; empty = unbounded
  std::uint64_t seed = 0;
  bool solver_variety = true;       // hash-pick among admissible square interiors

  bool valid() const { return n_colors >= 3 && (!max_run || *max_run >= 1); }
};

namespace detail {

inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

constexpr std::uint64_t fnv1a_word(std::uint64_t h, std::uint64_t word) {
  for (int k = 0; k < 8; ++k) {
    h ^= (word >> (8 * k)) & 0xffu;
    h *= kFnvPrime;
  }
  return h;
}

}  // namespace detail

// FNV-1a over the little-endian two's-complement bytes of (i, j, tag, seed),
// then one xorshift64 scramble. Bit-exact everywhere; this is the sole
// randomness source of the whole generator.
constexpr std::uint64_t hash_cell(std::int64_t i, std::int64_t j, StreamTag tag,
                                  std::uint64_t seed) {
  std::uint64_t h = detail::kFnvOffset;
  h = detail::fnv1a_word(h, static_cast<std::uint64_t>(i));
  h = detail::fnv1a_word(h, static_cast<std::uint64_t>(j));
  h ^= static_cast<std::uint64_t>(tag);
  h *= detail::kFnvPrime;
  h = detail::fnv1a_word(h, seed);
  h ^= h << 13;
  h ^= h >> 7;
  h ^= h << 17;
  return h;
}

constexpr EdgeColor color_h(std::int64_t i, std::int64_t j, const WallParams& p) {
  return static_cast<EdgeColor>(hash_cell(i, j, StreamTag::HEdge, p.seed) %
                                static_cast<std::uint64_t>(p.n_colors));
}

constexpr EdgeColor color_v(std::int64_t i, std::int64_t j, const WallParams& p) {
  return static_cast<EdgeColor>(hash_cell(i, j, StreamTag::VEdge, p.seed) %
                                static_cast<std::uint64_t>(p.n_colors));
}

// Order-preserving remap of m in [0, n-1) onto [0, n) minus {avoid}.
constexpr EdgeColor remap_avoid1(EdgeColor m, EdgeColor avoid) {
  return m < avoid ? m : m + 1;
}

// Remap of m in [0, n-2) onto [0, n) minus {lo, hi}, lo < hi.
constexpr EdgeColor remap_avoid2(EdgeColor m, EdgeColor lo, EdgeColor hi) {
  if (m < lo) return m;
  if (m < hi - 1) return m + 1;
  return m + 2;
}

// Fresh color distinct from `avoid`, uniform over the rest.
constexpr EdgeColor diff1(std::int64_t i, std::int64_t j, EdgeColor avoid,
                          StreamTag tag, const WallParams& p) {
  const auto m = static_cast<EdgeColor>(
      hash_cell(i, j, tag, p.seed) % static_cast<std::uint64_t>(p.n_colors - 1));
  return remap_avoid1(m, avoid);
}

// Fresh color distinct from both a and b; collapses to diff1 when they agree.
constexpr EdgeColor diff2(std::int64_t i, std::int64_t j, EdgeColor a, EdgeColor b,
                          StreamTag tag, const WallParams& p) {
  if (a == b) return diff1(i, j, a, tag, p);
  const auto m = static_cast<EdgeColor>(
      hash_cell(i, j, tag, p.seed) % static_cast<std::uint64_t>(p.n_colors - 2));
  return remap_avoid2(m, std::min(a, b), std::max(a, b));
}

inline std::uint64_t mix64(std::uint64_t x) {  // splitmix64 finalizer, utility RNG
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace wallgen
