#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "wallgen/geometry.hpp"
#include "wallgen/tiling.hpp"

namespace wallgen {

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // packed RGB, row 0 at the top

  Image() = default;
  Image(int w, int h)
      : width(w), height(h), rgb(static_cast<std::size_t>(w) * h * 3, 0) {}

  std::uint8_t* pixel(int px, int py) {
    return rgb.data() + (static_cast<std::size_t>(py) * width + px) * 3;
  }
  const std::uint8_t* pixel(int px, int py) const {
    return rgb.data() + (static_cast<std::size_t>(py) * width + px) * 3;
  }
};

struct WorldRect {
  double x0 = 0.0;
  double y0 = 0.0;
  double width = 0.0;
  double height = 0.0;
};

enum class RenderMode { Lines, Color, Distance, Phase, Normal };

struct RenderStyle {
  double thickness = 0.08;      // world units of boundary ink
  double corner_radius = 0.0;   // world units, clamped per brick
  double distance_scale = 0.5;  // world distance mapped to full white
  double sat_min = 0.45, sat_max = 0.75;
  double val_min = 0.55, val_max = 0.90;
  std::uint64_t palette_seed = 0;
};

// One brick face evaluation shared by every mode.
namespace detail {

struct Shade {
  BrickId id;
  BrickRect rect;
  BrickFrame frame;
};

template <EdgeField F>
Shade shade_point(const F& field, Point p, double corner_radius) {
  Shade s;
  s.id = locate_brick(field, p);
  s.rect = brick_rect(field, s.id);
  s.frame = frame_in_rect(p, s.rect, corner_radius);
  return s;
}

std::array<std::uint8_t, 3> hsv_bytes(double h, double s, double v);
std::array<std::uint8_t, 3> palette_color(std::uint64_t key,
                                          const RenderStyle& style);
std::uint8_t distance_byte(double signed_dist, const RenderStyle& style);

}  // namespace detail

inline bool on_boundary(double signed_dist, const RenderStyle& style) {
  return signed_dist >= -style.thickness / 2.0;
}

template <EdgeField F>
std::array<std::uint8_t, 3> shade_pixel(const F& field, const WallParams& params,
                                        Point p, RenderMode mode,
                                        const RenderStyle& style, double fd_step) {
  const auto s = detail::shade_point(field, p, style.corner_radius);
  switch (mode) {
    case RenderMode::Lines:
      return on_boundary(s.frame.signed_dist, style)
                 ? std::array<std::uint8_t, 3>{0, 0, 0}
                 : std::array<std::uint8_t, 3>{255, 255, 255};
    case RenderMode::Color:
      return on_boundary(s.frame.signed_dist, style)
                 ? std::array<std::uint8_t, 3>{0, 0, 0}
                 : detail::palette_color(brick_color_key(s.id, params), style);
    case RenderMode::Distance: {
      const std::uint8_t g = detail::distance_byte(s.frame.signed_dist, style);
      return {g, g, g};
    }
    case RenderMode::Phase:
      return detail::hsv_bytes(s.frame.polar_phase / (2.0 * std::numbers::pi),
                               1.0, 1.0);
    case RenderMode::Normal: {
      auto sd = [&](double x, double y) {
        return detail::shade_point(field, {x, y}, style.corner_radius)
            .frame.signed_dist;
      };
      const double gx =
          (sd(p.x + fd_step, p.y) - sd(p.x - fd_step, p.y)) / (2.0 * fd_step);
      const double gy =
          (sd(p.x, p.y + fd_step) - sd(p.x, p.y - fd_step)) / (2.0 * fd_step);
      const double inv = 1.0 / std::sqrt(gx * gx + gy * gy + 1.0);
      const double nx = -gx * inv, ny = -gy * inv, nz = inv;
      auto channel = [](double v) {
        return static_cast<std::uint8_t>(std::llround(v * 255.0));
      };
      return {channel((nx + 1.0) / 2.0), channel((ny + 1.0) / 2.0), channel(nz)};
    }
  }
  return {0, 0, 0};
}

// Pixel (px, py) samples the world at the pixel center with the top image row
// at the top of the window, so identical windows give identical bytes and
// adjacent windows butt together seam-free.
template <EdgeField F>
Image rasterize(const F& field, const WallParams& params, WorldRect window,
                int px_w, int px_h, RenderMode mode, const RenderStyle& style) {
  if (window.width <= 0.0 || window.height <= 0.0)
    throw std::invalid_argument("rasterize: window must have positive area");
  if (px_w < 1 || px_h < 1)
    throw std::invalid_argument("rasterize: resolution must be at least 1x1");

  Image img(px_w, px_h);
  const double sx = window.width / static_cast<double>(px_w);
  const double sy = window.height / static_cast<double>(px_h);
  const double fd_step = std::min(sx, sy) / 2.0;
  for (int py = 0; py < px_h; ++py) {
    const double y = window.y0 +
                     (static_cast<double>(px_h - py) - 0.5) * sy;
    for (int px = 0; px < px_w; ++px) {
      const double x = window.x0 + (static_cast<double>(px) + 0.5) * sx;
      const auto c = shade_pixel(field, params, {x, y}, mode, style, fd_step);
      std::uint8_t* out = img.pixel(px, py);
      out[0] = c[0];
      out[1] = c[1];
      out[2] = c[2];
    }
  }
  return img;
}

Image rasterize(const WallParams& params, WorldRect window, int px_w, int px_h,
                RenderMode mode, const RenderStyle& style);

void write_ppm(const Image& img, const std::string& path);
std::vector<std::uint8_t> ppm_bytes(const Image& img);

bool png_supported();
void write_png(const Image& img, const std::string& path);  // throws if unsupported

std::uint64_t image_checksum(const Image& img);

}  // namespace wallgen
