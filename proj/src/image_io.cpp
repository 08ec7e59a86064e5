#include "wallgen/render.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "wallgen/hash.hpp"

#ifdef WALLGEN_HAVE_ZLIB
#include <zlib.h>
#endif

namespace wallgen {

namespace detail {

std::array<std::uint8_t, 3> hsv_bytes(double h, double s, double v) {
  h -= std::floor(h);
  const double x = h * 6.0;
  const int sector = std::min(5, static_cast<int>(x));
  const double f = x - static_cast<double>(sector);
  const double p = v * (1.0 - s);
  const double q = v * (1.0 - s * f);
  const double t = v * (1.0 - s * (1.0 - f));
  double r = 0.0, g = 0.0, b = 0.0;
  switch (sector) {
    case 0: r = v; g = t; b = p; break;
    case 1: r = q; g = v; b = p; break;
    case 2: r = p; g = v; b = t; break;
    case 3: r = p; g = q; b = v; break;
    case 4: r = t; g = p; b = v; break;
    case 5: r = v; g = p; b = q; break;
  }
  auto byte = [](double c) {
    return static_cast<std::uint8_t>(std::llround(std::clamp(c, 0.0, 1.0) * 255.0));
  };
  return {byte(r), byte(g), byte(b)};
}

std::array<std::uint8_t, 3> palette_color(std::uint64_t key,
                                          const RenderStyle& style) {
  const std::uint64_t k = mix64(key ^ style.palette_seed);
  const double unit = 1.0 / static_cast<double>(1 << 20);
  const double hue = static_cast<double>(k & 0xFFFFF) * unit;
  const double sf = static_cast<double>((k >> 20) & 0xFFFFF) * unit;
  const double vf = static_cast<double>((k >> 40) & 0xFFFFF) * unit;
  return hsv_bytes(hue, style.sat_min + sf * (style.sat_max - style.sat_min),
                   style.val_min + vf * (style.val_max - style.val_min));
}

// 0 exactly on boundary ink, then a linear ramp over distance_scale.
std::uint8_t distance_byte(double signed_dist, const RenderStyle& style) {
  if (on_boundary(signed_dist, style)) return 0;
  const double d = -signed_dist - style.thickness / 2.0;
  const double v = std::clamp(d / style.distance_scale, 0.0, 1.0);
  return static_cast<std::uint8_t>(1 + std::llround(v * 254.0));
}

}  // namespace detail

Image rasterize(const WallParams& params, WorldRect window, int px_w, int px_h,
                RenderMode mode, const RenderStyle& style) {
  return rasterize(CachedWall(params), params, window, px_w, px_h, mode, style);
}

std::vector<std::uint8_t> ppm_bytes(const Image& img) {
  const std::string header = "P6\n" + std::to_string(img.width) + " " +
                             std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.rgb.begin(), img.rgb.end());
  return out;
}

void write_ppm(const Image& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_ppm: cannot open " + path);
  const auto bytes = ppm_bytes(img);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write_ppm: short write to " + path);
}

std::uint64_t image_checksum(const Image& img) {
  std::uint64_t h = 14695981039346656037ull;
  auto fold = [&h](std::uint64_t word, int bytes) {
    for (int k = 0; k < bytes; ++k) {
      h ^= (word >> (8 * k)) & 0xFF;
      h *= 1099511628211ull;
    }
  };
  fold(static_cast<std::uint64_t>(img.width), 8);
  fold(static_cast<std::uint64_t>(img.height), 8);
  for (const std::uint8_t b : img.rgb) fold(b, 1);
  return h;
}

#ifdef WALLGEN_HAVE_ZLIB

bool png_supported() { return true; }

namespace {

void put_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_chunk(std::vector<std::uint8_t>& out, const char type[4],
               const std::vector<std::uint8_t>& data) {
  put_be32(out, static_cast<std::uint32_t>(data.size()));
  const std::size_t crc_start = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), data.begin(), data.end());
  const auto crc = crc32(0, out.data() + crc_start,
                         static_cast<uInt>(out.size() - crc_start));
  put_be32(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

void write_png(const Image& img, const std::string& path) {
  std::vector<std::uint8_t> raw;
  raw.reserve(static_cast<std::size_t>(img.height) * (img.width * 3 + 1));
  for (int py = 0; py < img.height; ++py) {
    raw.push_back(0);  // per-row filter: none
    raw.insert(raw.end(), img.pixel(0, py), img.pixel(0, py) + img.width * 3);
  }
  uLongf packed_size = compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> packed(packed_size);
  if (compress2(packed.data(), &packed_size, raw.data(),
                static_cast<uLong>(raw.size()), 9) != Z_OK)
    throw std::runtime_error("write_png: deflate failed");
  packed.resize(packed_size);

  std::vector<std::uint8_t> file{137, 80, 78, 71, 13, 10, 26, 10};
  std::vector<std::uint8_t> ihdr;
  put_be32(ihdr, static_cast<std::uint32_t>(img.width));
  put_be32(ihdr, static_cast<std::uint32_t>(img.height));
  ihdr.insert(ihdr.end(), {8, 2, 0, 0, 0});  // 8-bit truecolor
  put_chunk(file, "IHDR", ihdr);
  put_chunk(file, "IDAT", packed);
  put_chunk(file, "IEND", {});

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_png: cannot open " + path);
  out.write(reinterpret_cast<const char*>(file.data()),
            static_cast<std::streamsize>(file.size()));
  if (!out) throw std::runtime_error("write_png: short write to " + path);
}

#else

bool png_supported() { return false; }

void write_png(const Image&, const std::string&) {
  throw std::runtime_error("write_png: built without zlib");
}

#endif

}  // namespace wallgen
