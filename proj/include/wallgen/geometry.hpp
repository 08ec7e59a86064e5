#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "wallgen/tiling.hpp"

namespace wallgen {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Face of the line arrangement between column staircases i, i+1 and row
// staircases j, j+1. Bijective with the cell lattice.
struct BrickId {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend bool operator==(const BrickId&, const BrickId&) = default;
};

struct BrickRect {
  double x_left = 0.0;
  double x_right = 0.0;
  double y_bottom = 0.0;
  double y_top = 0.0;

  double width() const { return x_right - x_left; }
  double height() const { return y_top - y_bottom; }
  Point center() const {
    return {(x_left + x_right) / 2.0, (y_bottom + y_top) / 2.0};
  }
  bool contains(Point p) const {
    return p.x >= x_left && p.x <= x_right && p.y >= y_bottom && p.y <= y_top;
  }
};

struct BrickFrame {
  double u = 0.0;
  double v = 0.0;
  double polar_phase = 0.0;  // arc length along the rim, scaled to [0, 2pi)
  double signed_dist = 0.0;  // negative strictly inside the rounded rectangle
  double corner_radius = 0.0;
};

// Maps an edge color to a line position inside its cell, strictly between the
// cell borders so bricks never degenerate to zero thickness.
inline double offset(EdgeColor c, int n_colors) {
  return static_cast<double>(c + 1) / static_cast<double>(n_colors + 1);
}

// Height of the brick boundary polyline that separates cell rows j-1 and j,
// evaluated at horizontal position x. Flat where the two vertical edge colors
// of the underlying cell agree (a horizontal tile), jogging at the through
// line of a vertical tile otherwise.
template <EdgeField F>
double row_staircase_y(const F& field, std::int64_t j, double x) {
  const auto m = static_cast<std::int64_t>(std::floor(x));
  const int nc = field.color_count();
  const EdgeColor vl = field.edge_v(m, j);
  const EdgeColor vr = field.edge_v(m + 1, j);
  if (vl == vr) return static_cast<double>(j) + offset(vl, nc);
  const double jog =
      static_cast<double>(m) + offset(field.edge_h(m, j), nc);
  return static_cast<double>(j) + offset(x < jog ? vl : vr, nc);
}

template <EdgeField F>
double col_staircase_x(const F& field, std::int64_t i, double y) {
  const auto m = static_cast<std::int64_t>(std::floor(y));
  const int nc = field.color_count();
  const EdgeColor hb = field.edge_h(i, m);
  const EdgeColor ht = field.edge_h(i, m + 1);
  if (hb == ht) return static_cast<double>(i) + offset(hb, nc);
  const double jog =
      static_cast<double>(m) + offset(field.edge_v(i, m), nc);
  return static_cast<double>(i) + offset(y < jog ? hb : ht, nc);
}

// O(1) point query: two staircase evaluations bracket the face. Points on a
// boundary line resolve to the brick above (rows) or to the right (columns).
template <EdgeField F>
BrickId locate_brick(const F& field, Point p) {
  const auto fi = static_cast<std::int64_t>(std::floor(p.x));
  const auto fj = static_cast<std::int64_t>(std::floor(p.y));
  const std::int64_t bi = col_staircase_x(field, fi, p.y) <= p.x ? fi : fi - 1;
  const std::int64_t bj = row_staircase_y(field, fj, p.x) <= p.y ? fj : fj - 1;
  return {bi, bj};
}

// Every face is an axis-aligned rectangle: row-staircase jogs happen exactly
// on column staircases and vice versa. The grid vertex (i+1, j+1) is strictly
// interior to face (i, j) because offsets avoid the cell borders, which makes
// it a safe probe for all four sides.
template <EdgeField F>
BrickRect brick_rect(const F& field, BrickId b) {
  const Point q{static_cast<double>(b.i + 1), static_cast<double>(b.j + 1)};
  return {.x_left = col_staircase_x(field, b.i, q.y),
          .x_right = col_staircase_x(field, b.i + 1, q.y),
          .y_bottom = row_staircase_y(field, b.j, q.x),
          .y_top = row_staircase_y(field, b.j + 1, q.x)};
}

// Cartesian and polar frame of a point inside a brick, with the brick outline
// shrunk to a rounded rectangle of the given corner radius (clamped so the
// quarter circles always fit). polar_phase walks the rim counterclockwise
// from the left end of the bottom straight edge; at the exact center the
// nearest-rim tie resolves toward the positive x side.
inline BrickFrame frame_in_rect(Point p, const BrickRect& rect,
                                double corner_radius) {
  if (!rect.contains(p))
    throw std::invalid_argument("frame_in_rect: point outside its brick");
  const double w = rect.width();
  const double h = rect.height();
  const double r = std::clamp(corner_radius, 0.0, std::min(w, h) / 2.0);
  const double hx = w / 2.0 - r;  // inner half extents
  const double hy = h / 2.0 - r;
  const Point c = rect.center();
  const double px = p.x - c.x;
  const double py = p.y - c.y;
  const double dx = std::abs(px) - hx;
  const double dy = std::abs(py) - hy;

  double sd;
  if (dx > 0.0 && dy > 0.0)
    sd = std::hypot(dx, dy) - r;
  else
    sd = std::max(dx, dy) - r;

  constexpr double kPi = std::numbers::pi;
  const double rim_len = 4.0 * hx + 4.0 * hy + 2.0 * kPi * r;
  double s;  // arc length of the nearest rim point
  if (dx > 0.0 && dy > 0.0) {
    const double cx = px >= 0.0 ? hx : -hx;
    const double cy = py >= 0.0 ? hy : -hy;
    const double phi = std::atan2(py - cy, px - cx);
    if (px >= 0.0 && py < 0.0)
      s = 2.0 * hx + (phi + kPi / 2.0) * r;
    else if (px >= 0.0)
      s = 2.0 * hx + (kPi / 2.0) * r + 2.0 * hy + phi * r;
    else if (py >= 0.0)
      s = 4.0 * hx + kPi * r + 2.0 * hy + (phi - kPi / 2.0) * r;
    else
      s = 4.0 * hx + (3.0 * kPi / 2.0) * r + 4.0 * hy + (phi + kPi) * r;
  } else if (dx >= dy) {
    const double ny = std::clamp(py, -hy, hy);
    if (px >= 0.0)
      s = 2.0 * hx + (kPi / 2.0) * r + (ny + hy);
    else
      s = 4.0 * hx + (3.0 * kPi / 2.0) * r + 2.0 * hy + (hy - ny);
  } else {
    const double nx = std::clamp(px, -hx, hx);
    if (py >= 0.0)
      s = 2.0 * hx + kPi * r + 2.0 * hy + (hx - nx);
    else
      s = nx + hx;
  }

  double phase = 2.0 * kPi * s / rim_len;
  phase = std::fmod(phase, 2.0 * kPi);
  if (phase < 0.0) phase += 2.0 * kPi;

  return {.u = (p.x - rect.x_left) / w,
          .v = (p.y - rect.y_bottom) / h,
          .polar_phase = phase,
          .signed_dist = sd,
          .corner_radius = r};
}

template <EdgeField F>
BrickFrame brick_frame(const F& field, Point p, double corner_radius) {
  return frame_in_rect(p, brick_rect(field, locate_brick(field, p)),
                       corner_radius);
}

// Stable per-brick identity for coloring; its stream never collides with the
// edge or solver streams.
inline std::uint64_t brick_color_key(BrickId b, const WallParams& params) {
  return hash_cell(b.i, b.j, StreamTag::BrickColor, params.seed);
}

}  // namespace wallgen
