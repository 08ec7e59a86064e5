#include "wallgen/tiling.hpp"

#include <stdexcept>
#include <string>

namespace wallgen {

std::vector<Tile> enumerate_tileset(int n_colors) {
  std::vector<Tile> out;
  for (EdgeColor hb = 0; hb < n_colors; ++hb)
    for (EdgeColor ht = 0; ht < n_colors; ++ht)
      for (EdgeColor vl = 0; vl < n_colors; ++vl)
        for (EdgeColor vr = 0; vr < n_colors; ++vr)
          if (auto o = classify(hb, ht, vl, vr))
            out.push_back({hb, ht, vl, vr, *o});
  return out;
}

int boundary_case(const SquareBoundary& b) {
  const int b1 = b.h_top_left == b.h_bottom_left;
  const int b2 = b.h_bottom_right == b.h_top_right;
  const int b3 = b.v_left_top == b.v_right_top;
  const int b4 = b.v_left_bottom == b.v_right_bottom;
  return b1 * 8 + b2 * 4 + b3 * 2 + b4;
}

namespace {

// Interior slots take the first border candidate (A), the second (B), or a
// re-draw avoiding both (D):
//   v_top:    A=V(ai,aj+1)  B=V(ai+2,aj+1)  D avoids both, keyed (ai+1,aj+1)
//   h_left:   A=H(ai,aj)    B=H(ai,aj+2)    D avoids both, keyed (ai,aj+1)
//   v_bottom: A=V(ai,aj)    B=V(ai+2,aj)    D avoids both, keyed (ai+1,aj)
//   h_right:  A=H(ai+1,aj)  B=H(ai+1,aj+2)  D avoids both, keyed (ai+1,aj+1)
enum class Src : std::uint8_t { A, B, D };

struct Recipe {
  Src v_top, h_left, v_bottom, h_right;
};

struct CaseSolutions {
  int count;
  Recipe recipe[3];
};

using enum Src;

// Indexed by boundary_case: bit 8 = left H pair equal, 4 = right H pair,
// 2 = top V pair, 1 = bottom V pair.
constexpr CaseSolutions kTable[16] = {
    /* 0000 */ {2, {{A, A, B, B}, {B, B, A, A}, {}}},
    /* 0001 */ {3, {{D, B, A, B}, {B, B, A, D}, {A, D, A, B}}},
    /* 0010 */ {3, {{A, A, D, A}, {A, A, B, D}, {A, D, A, A}}},
    /* 0011 */ {3, {{A, D, A, D}, {A, A, D, A}, {D, B, A, B}}},
    /* 0100 */ {3, {{A, D, A, A}, {D, B, A, A}, {A, A, D, A}}},
    /* 0101 */ {2, {{A, A, D, A}, {B, B, A, D}, {}}},
    /* 0110 */ {2, {{D, B, A, A}, {B, A, B, D}, {}}},
    /* 0111 */ {1, {{A, D, A, D}, {}, {}}},
    /* 1000 */ {3, {{B, B, B, D}, {D, B, B, B}, {B, B, D, A}}},
    /* 1001 */ {2, {{B, B, D, A}, {A, D, A, B}, {}}},
    /* 1010 */ {2, {{D, B, B, B}, {B, D, A, A}, {}}},
    /* 1011 */ {1, {{A, D, A, D}, {}, {}}},
    /* 1100 */ {3, {{D, B, D, A}, {A, D, A, A}, {B, B, B, D}}},
    /* 1101 */ {1, {{D, B, D, A}, {}, {}}},
    /* 1110 */ {1, {{D, B, D, A}, {}, {}}},
    /* 1111 */ {2, {{D, B, D, A}, {A, D, A, D}, {}}},
};

SquareInterior materialize(const Recipe& r, const SquareBoundary& b,
                           std::int64_t ai, std::int64_t aj,
                           const WallParams& p) {
  SquareInterior out;
  switch (r.v_top) {
    case A: out.v_top = b.v_left_top; break;
    case B: out.v_top = b.v_right_top; break;
    case D:
      out.v_top =
          diff2(ai + 1, aj + 1, b.v_left_top, b.v_right_top, StreamTag::VEdge, p);
      break;
  }
  switch (r.h_left) {
    case A: out.h_left = b.h_bottom_left; break;
    case B: out.h_left = b.h_top_left; break;
    case D:
      out.h_left =
          diff2(ai, aj + 1, b.h_top_left, b.h_bottom_left, StreamTag::HEdge, p);
      break;
  }
  switch (r.v_bottom) {
    case A: out.v_bottom = b.v_left_bottom; break;
    case B: out.v_bottom = b.v_right_bottom; break;
    case D:
      out.v_bottom = diff2(ai + 1, aj, b.v_left_bottom, b.v_right_bottom,
                           StreamTag::VEdge, p);
      break;
  }
  switch (r.h_right) {
    case A: out.h_right = b.h_bottom_right; break;
    case B: out.h_right = b.h_top_right; break;
    case D:
      out.h_right = diff2(ai + 1, aj + 1, b.h_bottom_right, b.h_top_right,
                          StreamTag::HEdge, p);
      break;
  }
  return out;
}

// The produced H(ai,aj+1) differs from H(ai,aj) exactly when the bottom-left
// tile comes out Horizontal.
bool bottom_left_horizontal(const Recipe& r, const SquareBoundary& b) {
  if (r.h_left == A) return false;
  if (r.h_left == D) return true;
  return b.h_top_left != b.h_bottom_left;
}

// Border H edge (even j). Finite bounds re-draw the bottom edge of each
// constrained square against the square's top edge so that square always
// presents an all-unequal boundary and solves to a checkerboard.
EdgeColor outer_h(std::int64_t i, std::int64_t j, const WallParams& p) {
  if (!p.max_run) return color_h(i, j, p);
  if (*p.max_run == 2) {
    if (floor_mod(j, 4) == 2)
      return diff2(i, j, color_h(i, j - 2, p), color_h(i, j + 2, p),
                   StreamTag::HEdge, p);
    return color_h(i, j, p);
  }
  if (is_constrained_square(i - floor_mod(i, 2), j, p))
    return diff1(i, j, color_h(i, j + 2, p), StreamTag::HEdge, p);
  return color_h(i, j, p);
}

EdgeColor outer_v(std::int64_t i, std::int64_t j, const WallParams& p) {
  if (!p.max_run) return color_v(i, j, p);
  if (*p.max_run == 2) {
    if (floor_mod(i, 4) == 2)
      return diff2(i, j, color_v(i - 2, j, p), color_v(i + 2, j, p),
                   StreamTag::VEdge, p);
    return color_v(i, j, p);
  }
  if (is_constrained_square(i, j - floor_mod(j, 2), p))
    return diff1(i, j, color_v(i + 2, j, p), StreamTag::VEdge, p);
  return color_v(i, j, p);
}

// max_run == 1: orientations form a global checkerboard (Horizontal iff i+j
// even), so no square solving at all. H edges pair up along each column: the
// pair anchored at row pa (i+pa odd) spans rows pa, pa+1 with one shared
// color; every other pair re-draws against both neighbouring pairs, keeping
// consecutive pairs distinct. V edges mirror this along rows.
EdgeColor pair_h(std::int64_t i, std::int64_t j, const WallParams& p) {
  const std::int64_t pa = floor_mod(i + j, 2) == 1 ? j : j - 1;
  const std::int64_t t = floor_div(pa - floor_mod(i + 1, 2), 2);
  if (floor_mod(t, 2) == 0) return color_h(i, pa, p);
  return diff2(i, pa, color_h(i, pa - 2, p), color_h(i, pa + 2, p),
               StreamTag::HEdge, p);
}

EdgeColor pair_v(std::int64_t i, std::int64_t j, const WallParams& p) {
  const std::int64_t q = floor_mod(i + j, 2) == 0 ? i : i - 1;
  const std::int64_t t = floor_div(q - floor_mod(j, 2), 2);
  if (floor_mod(t, 2) == 0) return color_v(q, j, p);
  return diff2(q, j, color_v(q - 2, j, p), color_v(q + 2, j, p),
               StreamTag::VEdge, p);
}

}  // namespace

std::vector<SquareInterior> square_solutions(const SquareBoundary& b,
                                             std::int64_t ai, std::int64_t aj,
                                             const WallParams& p) {
  const CaseSolutions& c = kTable[boundary_case(b)];
  std::vector<SquareInterior> out;
  out.reserve(static_cast<std::size_t>(c.count));
  for (int k = 0; k < c.count; ++k)
    out.push_back(materialize(c.recipe[k], b, ai, aj, p));
  return out;
}

SquareInterior solve_square(const SquareBoundary& b, std::int64_t ai,
                            std::int64_t aj, const WallParams& p) {
  const CaseSolutions& c = kTable[boundary_case(b)];
  int pick = 0;
  if (p.max_run && *p.max_run > 2 && *p.max_run % 2 == 1 &&
      is_constrained_square(ai, aj, p)) {
    // Odd bound: all constrained squares must root the same checkerboard,
    // otherwise two diagonal slices could chain a run one past the bound.
    for (int k = 0; k < c.count; ++k) {
      if (bottom_left_horizontal(c.recipe[k], b)) {
        pick = k;
        break;
      }
    }
  } else if (p.solver_variety && c.count > 1) {
    pick = static_cast<int>(hash_cell(ai, aj, StreamTag::SolverChoice, p.seed) %
                            static_cast<std::uint64_t>(c.count));
  }
  return materialize(c.recipe[pick], b, ai, aj, p);
}

SquareBoundary boundary_of(std::int64_t ai, std::int64_t aj,
                           const WallParams& p) {
  return {
      .h_bottom_left = outer_h(ai, aj, p),
      .h_bottom_right = outer_h(ai + 1, aj, p),
      .h_top_left = outer_h(ai, aj + 2, p),
      .h_top_right = outer_h(ai + 1, aj + 2, p),
      .v_left_bottom = outer_v(ai, aj, p),
      .v_left_top = outer_v(ai, aj + 1, p),
      .v_right_bottom = outer_v(ai + 2, aj, p),
      .v_right_top = outer_v(ai + 2, aj + 1, p),
  };
}

EdgeColor edge_h(std::int64_t i, std::int64_t j, const WallParams& p) {
  if (p.max_run && *p.max_run == 1) return pair_h(i, j, p);
  if (floor_mod(j, 2) == 0) return outer_h(i, j, p);
  const std::int64_t ai = i - floor_mod(i, 2);
  const SquareInterior in = solve_square(boundary_of(ai, j - 1, p), ai, j - 1, p);
  return i == ai ? in.h_left : in.h_right;
}

EdgeColor edge_v(std::int64_t i, std::int64_t j, const WallParams& p) {
  if (p.max_run && *p.max_run == 1) return pair_v(i, j, p);
  if (floor_mod(i, 2) == 0) return outer_v(i, j, p);
  const std::int64_t aj = j - floor_mod(j, 2);
  const SquareInterior in = solve_square(boundary_of(i - 1, aj, p), i - 1, aj, p);
  return j == aj ? in.v_bottom : in.v_top;
}

Tile tile(std::int64_t i, std::int64_t j, const WallParams& p) {
  Tile t;
  t.h_bottom = edge_h(i, j, p);
  t.h_top = edge_h(i, j + 1, p);
  t.v_left = edge_v(i, j, p);
  t.v_right = edge_v(i + 1, j, p);
  const auto o = classify(t.h_bottom, t.h_top, t.v_left, t.v_right);
  if (!o)
    throw std::logic_error("illegal tile at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
  t.orientation = *o;
  return t;
}

const SquareInterior& CachedWall::solved(std::int64_t ai, std::int64_t aj) const {
  const std::uint64_t key =
      (static_cast<std::uint64_t>(ai) >> 1) * 0x9e3779b97f4a7c15ull ^
      (static_cast<std::uint64_t>(aj) >> 1) * 0xc2b2ae3d27d4eb4full;
  Slot& s = slots_[key & (kSlots - 1)];
  if (!s.used || s.ai != ai || s.aj != aj) {
    s.interior = solve_square(boundary_of(ai, aj, params_), ai, aj, params_);
    s.ai = ai;
    s.aj = aj;
    s.used = true;
  }
  return s.interior;
}

EdgeColor CachedWall::edge_h(std::int64_t i, std::int64_t j) const {
  if (params_.max_run && *params_.max_run == 1)
    return wallgen::edge_h(i, j, params_);
  if (floor_mod(j, 2) == 0) return outer_h(i, j, params_);
  const std::int64_t ai = i - floor_mod(i, 2);
  const SquareInterior& in = solved(ai, j - 1);
  return i == ai ? in.h_left : in.h_right;
}

EdgeColor CachedWall::edge_v(std::int64_t i, std::int64_t j) const {
  if (params_.max_run && *params_.max_run == 1)
    return wallgen::edge_v(i, j, params_);
  if (floor_mod(i, 2) == 0) return outer_v(i, j, params_);
  const std::int64_t aj = j - floor_mod(j, 2);
  const SquareInterior& in = solved(i - 1, aj);
  return j == aj ? in.v_bottom : in.v_top;
}

}  // namespace wallgen
