#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <set>

#include "wallgen/hash.hpp"

using namespace wallgen;

namespace {
constexpr WallParams params3{.n_colors = 3, .max_run = {}, .seed = 0};
}

TEST_CASE("hash_cell frozen reference values") {
  // Computed once by an independent script from the stated constants.
  CHECK(hash_cell(0, 0, StreamTag::HEdge, 0) == 16363726370650874301ull);
  CHECK(hash_cell(5, -3, StreamTag::HEdge, 42) == 9916274760175885239ull);
  CHECK(hash_cell(-7, 11, StreamTag::VEdge, 9) == 4124187067340272885ull);
  CHECK(hash_cell(2, 2, StreamTag::SolverChoice, 1) == 8537711718695361852ull);
}

TEST_CASE("hash_cell determinism and stream separation") {
  int differing_tag = 0;
  int differing_seed = 0;
  for (std::int64_t k = 0; k < 1000; ++k) {
    const std::int64_t i = k * 31 - 500, j = k * 17 - 300;
    const auto a = hash_cell(i, j, StreamTag::HEdge, 7);
    CHECK(a == hash_cell(i, j, StreamTag::HEdge, 7));
    differing_tag += a != hash_cell(i, j, StreamTag::VEdge, 7);
    differing_seed += a != hash_cell(i, j, StreamTag::HEdge, 8);
  }
  CHECK(differing_tag == 1000);
  CHECK(differing_seed == 1000);
}

TEST_CASE("hash_cell low bits are uniform") {
  // Chi-square over the 8 low-3-bit buckets, 1e6 cells; 24.322 is the
  // p = 0.001 cut for 7 degrees of freedom.
  std::array<std::int64_t, 8> buckets{};
  for (std::int64_t j = 0; j < 1000; ++j)
    for (std::int64_t i = 0; i < 1000; ++i)
      ++buckets[hash_cell(i, j, StreamTag::HEdge, 0) & 7];
  const double expected = 1e6 / 8.0;
  double chi2 = 0;
  for (const auto c : buckets) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  CHECK(chi2 < 24.322);
}

TEST_CASE("color_h and color_v streams are uncorrelated") {
  const std::int64_t n = 100000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t i = k % 400, j = k / 400;
    const double x = color_h(i, j, params3);
    const double y = color_v(i, j, params3);
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
  }
  const double nd = static_cast<double>(n);
  const double cov = sxy / nd - (sx / nd) * (sy / nd);
  const double vx = sxx / nd - (sx / nd) * (sx / nd);
  const double vy = syy / nd - (sy / nd) * (sy / nd);
  const double r = cov / std::sqrt(vx * vy);
  CHECK(std::abs(r) < 0.01);
}

TEST_CASE("color_h range") {
  for (std::int64_t k = 0; k < 1000; ++k) {
    const auto c = color_h(k, -k, params3);
    CHECK(c >= 0);
    CHECK(c < 3);
  }
}

TEST_CASE("remap_avoid1 is the order-preserving bijection") {
  // n_colors = 3 spot values
  CHECK(remap_avoid1(0, 2) == 0);
  CHECK(remap_avoid1(1, 2) == 1);
  CHECK(remap_avoid1(0, 0) == 1);
  CHECK(remap_avoid1(1, 0) == 2);
  for (int nc = 3; nc <= 6; ++nc) {
    for (EdgeColor avoid = 0; avoid < nc; ++avoid) {
      std::set<EdgeColor> hit;
      for (EdgeColor m = 0; m < nc - 1; ++m) {
        const auto r = remap_avoid1(m, avoid);
        CHECK(r != avoid);
        CHECK(r >= 0);
        CHECK(r < nc);
        hit.insert(r);
      }
      CHECK(hit.size() == static_cast<std::size_t>(nc - 1));
    }
  }
}

TEST_CASE("remap_avoid2 is the order-preserving bijection") {
  CHECK(remap_avoid2(0, 1, 3) == 0);  // n_colors = 4, avoiding {1, 3}
  CHECK(remap_avoid2(1, 1, 3) == 2);
  CHECK(remap_avoid2(0, 0, 2) == 1);  // n_colors = 3, single remaining color
  for (int nc = 3; nc <= 6; ++nc) {
    for (EdgeColor lo = 0; lo < nc; ++lo) {
      for (EdgeColor hi = lo + 1; hi < nc; ++hi) {
        std::set<EdgeColor> hit;
        for (EdgeColor m = 0; m < nc - 2; ++m) {
          const auto r = remap_avoid2(m, lo, hi);
          CHECK(r != lo);
          CHECK(r != hi);
          CHECK(r >= 0);
          CHECK(r < nc);
          hit.insert(r);
        }
        CHECK(hit.size() == static_cast<std::size_t>(nc - 2));
      }
    }
  }
}

TEST_CASE("diff1 avoids its input and spreads evenly") {
  for (int nc = 3; nc <= 5; ++nc) {
    const WallParams p{.n_colors = nc, .max_run = {}, .seed = 3};
    std::array<std::int64_t, 6> counts{};
    const std::int64_t n = 30000;
    const EdgeColor avoid = 1;
    for (std::int64_t k = 0; k < n; ++k) {
      const auto c = diff1(k, -2 * k + 1, avoid, StreamTag::HEdge, p);
      CHECK(c != avoid);
      ++counts[static_cast<std::size_t>(c)];
    }
    const double mean = static_cast<double>(n) / (nc - 1);
    for (EdgeColor c = 0; c < nc; ++c) {
      if (c == avoid) continue;
      CHECK(static_cast<double>(counts[static_cast<std::size_t>(c)]) >
            0.9 * mean);
      CHECK(static_cast<double>(counts[static_cast<std::size_t>(c)]) <
            1.1 * mean);
    }
  }
}

TEST_CASE("diff2 avoids both inputs and collapses to diff1 on equal inputs") {
  const WallParams p{.n_colors = 5, .max_run = {}, .seed = 11};
  for (std::int64_t k = 0; k < 5000; ++k) {
    const EdgeColor a = static_cast<EdgeColor>(k % 5);
    const EdgeColor b = static_cast<EdgeColor>((k / 5) % 5);
    const auto c = diff2(k, k + 13, a, b, StreamTag::VEdge, p);
    CHECK(c != a);
    CHECK(c != b);
    CHECK(c >= 0);
    CHECK(c < 5);
    if (a == b)
      CHECK(c == diff1(k, k + 13, a, StreamTag::VEdge, p));
  }
}
