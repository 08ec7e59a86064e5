#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wallgen/hash.hpp"

namespace wallgen {

enum class Orientation : std::uint8_t { Horizontal, Vertical };

struct CellIndex {
  std::int64_t i = 0, j = 0;
  friend bool operator==(CellIndex, CellIndex) = default;
};

struct Tile {
  EdgeColor h_bottom = 0, h_top = 0, v_left = 0, v_right = 0;
  Orientation orientation = Orientation::Horizontal;
};

constexpr std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

constexpr std::int64_t floor_div(std::int64_t x, std::int64_t m) {
  return (x - floor_mod(x, m)) / m;
}

// Tile legality: a brick line runs through either horizontally or vertically,
// never both, never neither. Horizontal keeps the V pair equal and the H pair
// distinct; vertical is the mirror.
constexpr std::optional<Orientation> classify(EdgeColor h_bottom, EdgeColor h_top,
                                              EdgeColor v_left, EdgeColor v_right) {
  const bool h_equal = h_bottom == h_top;
  const bool v_equal = v_left == v_right;
  if (h_equal == v_equal) return std::nullopt;
  return h_equal ? Orientation::Vertical : Orientation::Horizontal;
}

constexpr std::int64_t tileset_size(int n_colors) {
  return 2ll * n_colors * n_colors * (n_colors - 1);
}

// Every legal (h_bottom, h_top, v_left, v_right) combination.
std::vector<Tile> enumerate_tileset(int n_colors);

// 2x2 squares anchored at even indices are the solver unit.
constexpr CellIndex anchor(std::int64_t i, std::int64_t j) {
  return {i - floor_mod(i, 2), j - floor_mod(j, 2)};
}

// Diagonal spacing of constrained squares for a finite run bound.
constexpr std::int64_t dappling_period(int max_run) {
  if (max_run <= 2) return 2;
  return max_run % 2 == 0 ? max_run : max_run + 1;
}

// Constrained squares carry a forced orientation checkerboard; spaced so the
// free cells between them can never chain runs past the bound.
constexpr bool is_constrained_square(std::int64_t ai, std::int64_t aj,
                                     const WallParams& p) {
  if (!p.max_run) return false;
  const int n = *p.max_run;
  if (n == 1) return false;  // bound met by the global checkerboard path instead
  if (n == 2) return true;
  const std::int64_t period = dappling_period(n);
  return floor_mod(ai, period) == floor_mod(aj, period);
}

// Border edge colors of the square anchored at even (ai, aj).
struct SquareBoundary {
  EdgeColor h_bottom_left = 0, h_bottom_right = 0;  // H(ai,aj), H(ai+1,aj)
  EdgeColor h_top_left = 0, h_top_right = 0;        // H(ai,aj+2), H(ai+1,aj+2)
  EdgeColor v_left_bottom = 0, v_left_top = 0;      // V(ai,aj), V(ai,aj+1)
  EdgeColor v_right_bottom = 0, v_right_top = 0;    // V(ai+2,aj), V(ai+2,aj+1)
};

// Interior edge colors completing a square.
struct SquareInterior {
  EdgeColor v_top = 0;     // V(ai+1,aj+1)
  EdgeColor h_left = 0;    // H(ai,aj+1)
  EdgeColor v_bottom = 0;  // V(ai+1,aj)
  EdgeColor h_right = 0;   // H(ai+1,aj+1)
};

// Which of the four boundary pairs agree; indexes the solution table.
int boundary_case(const SquareBoundary& b);

// All admissible interiors for the boundary, in table order.
std::vector<SquareInterior> square_solutions(const SquareBoundary& b,
                                             std::int64_t ai, std::int64_t aj,
                                             const WallParams& p);

// The interior actually used at (ai, aj): hash-picked when solver_variety,
// first-listed otherwise, pinned to one checkerboard on constrained squares
// under an odd run bound.
SquareInterior solve_square(const SquareBoundary& b, std::int64_t ai,
                            std::int64_t aj, const WallParams& p);

SquareBoundary boundary_of(std::int64_t ai, std::int64_t aj, const WallParams& p);

// Edge color of the H edge below cell (i, j) / the V edge left of cell (i, j).
EdgeColor edge_h(std::int64_t i, std::int64_t j, const WallParams& p);
EdgeColor edge_v(std::int64_t i, std::int64_t j, const WallParams& p);

// Assembled cell; throws std::logic_error if the edges violate tile legality
// (impossible for well-formed params; the guard exists for corrupted fields).
Tile tile(std::int64_t i, std::int64_t j, const WallParams& p);

template <typename F>
concept EdgeField = requires(const F& f, std::int64_t i, std::int64_t j) {
  { f.edge_h(i, j) } -> std::convertible_to<EdgeColor>;
  { f.edge_v(i, j) } -> std::convertible_to<EdgeColor>;
  { f.color_count() } -> std::convertible_to<int>;
};

// The procedural wall as an edge-color field.
struct ProceduralWall {
  WallParams params;
  EdgeColor edge_h(std::int64_t i, std::int64_t j) const {
    return wallgen::edge_h(i, j, params);
  }
  EdgeColor edge_v(std::int64_t i, std::int64_t j) const {
    return wallgen::edge_v(i, j, params);
  }
  int color_count() const { return params.n_colors; }
};

// Same field with a small per-instance memo of solved squares. Point queries
// and window scans revisit the same square a handful of times; the memo keeps
// that O(1) instead of re-solving. Not thread-safe: one instance per thread.
class CachedWall {
 public:
  explicit CachedWall(const WallParams& params) : params_(params) {}

  EdgeColor edge_h(std::int64_t i, std::int64_t j) const;
  EdgeColor edge_v(std::int64_t i, std::int64_t j) const;
  int color_count() const { return params_.n_colors; }
  const WallParams& params() const { return params_; }

 private:
  const SquareInterior& solved(std::int64_t ai, std::int64_t aj) const;

  struct Slot {
    std::int64_t ai = 0, aj = 0;
    SquareInterior interior;
    bool used = false;
  };

  static constexpr int kSlots = 16;  // direct-mapped, power of two
  WallParams params_;
  mutable Slot slots_[kSlots];
};

static_assert(EdgeField<ProceduralWall>);
static_assert(EdgeField<CachedWall>);

// Assembled cell of any edge field; same legality guard as the params overload.
template <EdgeField F>
Tile tile(const F& field, std::int64_t i, std::int64_t j) {
  Tile t{.h_bottom = field.edge_h(i, j),
         .h_top = field.edge_h(i, j + 1),
         .v_left = field.edge_v(i, j),
         .v_right = field.edge_v(i + 1, j)};
  const auto o = classify(t.h_bottom, t.h_top, t.v_left, t.v_right);
  if (!o) throw std::logic_error("tile: illegal edge combination");
  t.orientation = *o;
  return t;
}

}  // namespace wallgen
