#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wallgen/tiling.hpp"

namespace wallgen {

// Orientation layout driving the stored generator. A cyclic dappling keeps
// every same-orientation run (rows for Horizontal, columns for Vertical) at or
// under the run bound even across the wraparound seam.
struct Dappling {
  std::int64_t width = 0;
  std::int64_t height = 0;
  bool cyclic = false;
  std::vector<Orientation> cells;  // row-major, cells[j * width + i]

  Orientation at(std::int64_t i, std::int64_t j) const {
    return cells[static_cast<std::size_t>(floor_mod(j, height) * width +
                                          floor_mod(i, width))];
  }
};

// Diagonal-checkerboard dappling: forced 2x2 checkerboards repeat along
// diagonals with the run-bound period, free cells are hash coins. Dimensions
// must be multiples of the period.
Dappling make_cyclic_dappling(std::int64_t width, std::int64_t height, int max_run,
                              std::uint64_t seed);

// Unconstrained coin-flip dappling, the stored analog of the unbounded wall.
Dappling make_random_dappling(std::int64_t width, std::int64_t height,
                              std::uint64_t seed);

// Stored tiling with repeatable borders: the left/right and bottom/top edge
// colors agree, so translated copies continue each other seamlessly.
struct GridTiling {
  std::int64_t width = 0;
  std::int64_t height = 0;
  WallParams params;
  EdgeColor border_color_v = 0;
  EdgeColor border_color_h = 0;
  std::vector<EdgeColor> v_edges;  // (width+1) x height
  std::vector<EdgeColor> h_edges;  // width x (height+1)

  EdgeColor& v_at(std::int64_t i, std::int64_t j) {
    return v_edges[static_cast<std::size_t>(j * (width + 1) + i)];
  }
  EdgeColor v_at(std::int64_t i, std::int64_t j) const {
    return v_edges[static_cast<std::size_t>(j * (width + 1) + i)];
  }
  EdgeColor& h_at(std::int64_t i, std::int64_t j) {
    return h_edges[static_cast<std::size_t>(j * width + i)];
  }
  EdgeColor h_at(std::int64_t i, std::int64_t j) const {
    return h_edges[static_cast<std::size_t>(j * width + i)];
  }
};

// Fills the vertical edges of row j so that colors change exactly at the
// row's Vertical cells and both ends carry the border color c. Needs at least
// two Vertical cells in the row and three edge colors.
void color_row(std::int64_t j, const Dappling& d, EdgeColor c, GridTiling& g);

// Transposed pass: horizontal edges of column i change exactly at Horizontal
// cells, ends pinned to c.
void color_col(std::int64_t i, const Dappling& d, EdgeColor c, GridTiling& g);

// Two-phase stored generator: lay out a dappling (cyclic when the run bound is
// finite), then color all rows and columns against hashed border colors.
GridTiling build_grid(std::int64_t width, std::int64_t height,
                      const WallParams& params);

// Cyclic edge-field view of a stored tiling; indices wrap modulo the grid
// dimensions, so the infinite plane repeats the grid.
class GridField {
 public:
  explicit GridField(const GridTiling& g) : grid_(&g) {}

  EdgeColor edge_h(std::int64_t i, std::int64_t j) const {
    return grid_->h_at(floor_mod(i, grid_->width), floor_mod(j, grid_->height));
  }
  EdgeColor edge_v(std::int64_t i, std::int64_t j) const {
    return grid_->v_at(floor_mod(i, grid_->width), floor_mod(j, grid_->height));
  }
  int color_count() const { return grid_->params.n_colors; }
  const GridTiling& grid() const { return *grid_; }

 private:
  const GridTiling* grid_;
};

static_assert(EdgeField<GridField>);

// Plain text dump: "wallgrid 1" magic, dimensions and parameters, then the
// H and V arrays row-major. load_grid throws std::runtime_error on malformed
// input.
void save_grid(const GridTiling& g, std::ostream& out);
GridTiling load_grid(std::istream& in);

}  // namespace wallgen
