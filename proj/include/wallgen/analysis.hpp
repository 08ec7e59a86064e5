#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wallgen/geometry.hpp"
#include "wallgen/grid.hpp"
#include "wallgen/tiling.hpp"

namespace wallgen {

enum class ViolationKind {
  Cross,       // both edge pairs equal: lines would cross
  ExtraBrick,  // both edge pairs distinct: a brick corner inside the cell
  EdgeMismatch,  // stored border colors disagree (grids only)
};

struct Violation {
  CellIndex cell;
  ViolationKind kind = ViolationKind::Cross;
};

struct ValidityReport {
  std::int64_t cells_scanned = 0;
  std::vector<Violation> violations;
  std::int64_t max_h_run = 0;  // longest Horizontal run along any row
  std::int64_t max_v_run = 0;  // longest Vertical run along any column

  bool ok() const { return violations.empty(); }
};

enum class RunAxis { RowsHorizontal, ColsVertical };

// Maximal same-orientation runs inside a window. Runs cut by the window
// border land in `truncated` and stay out of distribution statistics.
struct RunHistogram {
  RunAxis axis = RunAxis::RowsHorizontal;
  std::map<std::int64_t, std::int64_t> counts;
  std::map<std::int64_t, std::int64_t> truncated;
  std::int64_t cells_scanned = 0;
  std::int64_t axis_cells = 0;  // cells carrying the axis orientation

  std::int64_t total_runs() const {
    std::int64_t t = 0;
    for (const auto& [len, n] : counts) t += n;
    return t;
  }
};

namespace detail {

// Orientation per cell of one window row, with edge rows shared between
// consecutive calls so each edge is evaluated once. -1 marks an illegal cell.
template <EdgeField F>
void scan_row(const F& field, std::int64_t i0, std::int64_t j, std::int64_t w,
              std::vector<EdgeColor>& h_bottom, std::vector<EdgeColor>& h_top,
              std::vector<int>& out) {
  std::vector<EdgeColor> v(static_cast<std::size_t>(w + 1));
  for (std::int64_t i = 0; i <= w; ++i)
    v[static_cast<std::size_t>(i)] = field.edge_v(i0 + i, j);
  for (std::int64_t i = 0; i < w; ++i)
    h_top[static_cast<std::size_t>(i)] = field.edge_h(i0 + i, j + 1);
  for (std::int64_t i = 0; i < w; ++i) {
    const auto s = static_cast<std::size_t>(i);
    const auto o = classify(h_bottom[s], h_top[s], v[s], v[s + 1]);
    if (!o)
      out[s] = h_bottom[s] == h_top[s] ? -2 : -1;  // -2 cross, -1 extra brick
    else
      out[s] = o == Orientation::Horizontal ? 0 : 1;
  }
  h_bottom.swap(h_top);
}

}  // namespace detail

// Exhaustive constraint check of a w x h cell window; violations are data,
// not errors. Neighbor consistency is structural for an edge field (shared
// edges are one value), so the scan reduces to per-cell legality.
template <EdgeField F>
ValidityReport validate_window(const F& field, CellIndex origin, std::int64_t w,
                               std::int64_t h) {
  ValidityReport report;
  report.cells_scanned = w * h;
  std::vector<EdgeColor> h_bottom(static_cast<std::size_t>(w));
  std::vector<EdgeColor> h_top(static_cast<std::size_t>(w));
  std::vector<int> cells(static_cast<std::size_t>(w));
  std::vector<std::int64_t> v_runs(static_cast<std::size_t>(w), 0);
  for (std::int64_t i = 0; i < w; ++i)
    h_bottom[static_cast<std::size_t>(i)] = field.edge_h(origin.i + i, origin.j);

  for (std::int64_t j = 0; j < h; ++j) {
    detail::scan_row(field, origin.i, origin.j + j, w, h_bottom, h_top, cells);
    std::int64_t h_run = 0;
    for (std::int64_t i = 0; i < w; ++i) {
      const auto s = static_cast<std::size_t>(i);
      if (cells[s] < 0) {
        report.violations.push_back(
            {{origin.i + i, origin.j + j},
             cells[s] == -2 ? ViolationKind::Cross : ViolationKind::ExtraBrick});
        h_run = 0;
        v_runs[s] = 0;
        continue;
      }
      h_run = cells[s] == 0 ? h_run + 1 : 0;
      v_runs[s] = cells[s] == 1 ? v_runs[s] + 1 : 0;
      report.max_h_run = std::max(report.max_h_run, h_run);
      report.max_v_run = std::max(report.max_v_run, v_runs[s]);
    }
  }
  return report;
}

inline ValidityReport validate_window(const WallParams& params, CellIndex origin,
                                      std::int64_t w, std::int64_t h) {
  return validate_window(CachedWall(params), origin, w, h);
}

// Whole-grid check on the stored arrays: per-cell legality, repeatable-border
// equality (EdgeMismatch, flagged at column `width` / row `height`), and
// cyclic run maxima.
ValidityReport validate_grid(const GridTiling& g);

// Maximal runs of the axis orientation, one window scan. Illegal cells break
// runs and contribute nothing.
template <EdgeField F>
RunHistogram run_histogram(const F& field, CellIndex origin, std::int64_t w,
                           std::int64_t h, RunAxis axis) {
  RunHistogram hist;
  hist.axis = axis;
  hist.cells_scanned = w * h;
  const bool rows = axis == RunAxis::RowsHorizontal;
  const std::int64_t lanes = rows ? h : w;
  const std::int64_t steps = rows ? w : h;

  std::vector<EdgeColor> h_bottom(static_cast<std::size_t>(w));
  std::vector<EdgeColor> h_top(static_cast<std::size_t>(w));
  std::vector<int> cells(static_cast<std::size_t>(w));
  std::vector<std::vector<int>> window(
      static_cast<std::size_t>(h), std::vector<int>(static_cast<std::size_t>(w)));
  for (std::int64_t i = 0; i < w; ++i)
    h_bottom[static_cast<std::size_t>(i)] = field.edge_h(origin.i + i, origin.j);
  for (std::int64_t j = 0; j < h; ++j) {
    detail::scan_row(field, origin.i, origin.j + j, w, h_bottom, h_top, cells);
    window[static_cast<std::size_t>(j)] = cells;
  }

  // A run touching either end of its lane may continue outside the window,
  // so its true length is unknown and it is only ever a lower bound.
  const int want = rows ? 0 : 1;
  for (std::int64_t lane = 0; lane < lanes; ++lane) {
    std::int64_t run = 0;
    bool at_start = false;
    for (std::int64_t k = 0; k < steps; ++k) {
      const int cell = rows ? window[static_cast<std::size_t>(lane)]
                                    [static_cast<std::size_t>(k)]
                            : window[static_cast<std::size_t>(k)]
                                    [static_cast<std::size_t>(lane)];
      if (cell == want) {
        if (run == 0) at_start = k == 0;
        ++run;
        ++hist.axis_cells;
        if (k == steps - 1) hist.truncated[run] += 1;
      } else if (run > 0) {
        (at_start ? hist.truncated : hist.counts)[run] += 1;
        run = 0;
      }
    }
  }
  return hist;
}

template <EdgeField F>
RunHistogram run_histogram(const F& field, CellIndex origin, std::int64_t w,
                           std::int64_t h) {
  return run_histogram(field, origin, w, h, RunAxis::RowsHorizontal);
}

// Fraction of maximal same-orientation runs longer than three cells, pooled
// over row-Horizontal and column-Vertical runs, truncated runs excluded.
// An unbounded wall of independent fair orientations would give 1/8.
template <EdgeField F>
double long_line_frequency(const F& field, CellIndex origin, std::int64_t w,
                           std::int64_t h) {
  const auto rows = run_histogram(field, origin, w, h, RunAxis::RowsHorizontal);
  const auto cols = run_histogram(field, origin, w, h, RunAxis::ColsVertical);
  std::int64_t runs = 0, over = 0;
  for (const auto* hist : {&rows, &cols})
    for (const auto& [len, n] : hist->counts) {
      runs += n;
      if (len > 3) over += n;
    }
  return runs == 0 ? 0.0 : static_cast<double>(over) / static_cast<double>(runs);
}

// Total-variation distance between the complete-run length distributions.
double total_variation(const RunHistogram& a, const RunHistogram& b);

// Brute-force reference: rasterize the boundary network, flood-fill the free
// pixels, and box each component. Component boxes are reported with edges at
// wall-pixel centers, so they match true rectangles to half a raster step.
struct OracleBrick {
  BrickRect box;
  std::int64_t pixels = 0;
  bool touches_border = false;
};

struct OracleReport {
  std::int64_t components = 0;
  std::int64_t non_rectangular = 0;  // any nonzero value signals a core bug
  std::vector<OracleBrick> bricks;
  int samples_per_cell = 0;
  double raster_step = 0.0;
};

namespace detail {

OracleReport flood_boxes(const std::vector<std::uint8_t>& wall, std::int64_t px_w,
                         std::int64_t px_h, double x0, double y0, double step);

// Marks the raster row/column nearest to a world coordinate; the offsets all
// sit safely away from pixel-center ties for the supported color counts.
void mark_h_segment(std::vector<std::uint8_t>& wall, std::int64_t px_w,
                    std::int64_t px_h, double x0, double y0, double step,
                    double y, double x_from, double x_to);
void mark_v_segment(std::vector<std::uint8_t>& wall, std::int64_t px_w,
                    std::int64_t px_h, double x0, double y0, double step,
                    double x, double y_from, double y_to);

}  // namespace detail

template <EdgeField F>
OracleReport oracle_bricks(const F& field, CellIndex origin, std::int64_t w,
                           std::int64_t h, int samples_per_cell = 16) {
  const int s = samples_per_cell;
  const double step = 1.0 / static_cast<double>(s);
  const double x0 = static_cast<double>(origin.i);
  const double y0 = static_cast<double>(origin.j);
  const std::int64_t px_w = w * s, px_h = h * s;
  std::vector<std::uint8_t> wall(static_cast<std::size_t>(px_w * px_h), 0);
  const int nc = field.color_count();

  for (std::int64_t j = origin.j; j < origin.j + h; ++j)
    for (std::int64_t i = origin.i; i < origin.i + w; ++i) {
      const Tile t = tile(field, i, j);
      const double xi = static_cast<double>(i), yj = static_cast<double>(j);
      if (t.orientation == Orientation::Horizontal) {
        const double line_y = yj + offset(t.v_left, nc);
        detail::mark_h_segment(wall, px_w, px_h, x0, y0, step, line_y, xi,
                               xi + 1.0);
        detail::mark_v_segment(wall, px_w, px_h, x0, y0, step,
                               xi + offset(t.h_bottom, nc), yj, line_y);
        detail::mark_v_segment(wall, px_w, px_h, x0, y0, step,
                               xi + offset(t.h_top, nc), line_y, yj + 1.0);
      } else {
        const double line_x = xi + offset(t.h_bottom, nc);
        detail::mark_v_segment(wall, px_w, px_h, x0, y0, step, line_x, yj,
                               yj + 1.0);
        detail::mark_h_segment(wall, px_w, px_h, x0, y0, step,
                               yj + offset(t.v_left, nc), xi, line_x);
        detail::mark_h_segment(wall, px_w, px_h, x0, y0, step,
                               yj + offset(t.v_right, nc), line_x, xi + 1.0);
      }
    }

  OracleReport report = detail::flood_boxes(wall, px_w, px_h, x0, y0, step);
  report.samples_per_cell = s;
  report.raster_step = step;
  return report;
}

// Stable-field-name exports used by the command line tool.
std::string histogram_csv(const RunHistogram& hist);
std::string histogram_json(const RunHistogram& hist);
std::string report_json(const ValidityReport& report);

}  // namespace wallgen
