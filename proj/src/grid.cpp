#include "wallgen/grid.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wallgen {

namespace {

Orientation coin(std::int64_t i, std::int64_t j, std::uint64_t seed) {
  return hash_cell(i, j, StreamTag::SolverChoice, seed) & 1
             ? Orientation::Vertical
             : Orientation::Horizontal;
}

}  // namespace

Dappling make_cyclic_dappling(std::int64_t width, std::int64_t height,
                              int max_run, std::uint64_t seed) {
  if (max_run < 1)
    throw std::invalid_argument("make_cyclic_dappling: run bound must be >= 1");
  const std::int64_t period = dappling_period(max_run);
  if (width <= 0 || height <= 0 || width % period != 0 || height % period != 0)
    throw std::invalid_argument(
        "make_cyclic_dappling: dimensions must be positive multiples of " +
        std::to_string(period));

  Dappling d{.width = width, .height = height, .cyclic = true};
  d.cells.resize(static_cast<std::size_t>(width * height));
  for (std::int64_t j = 0; j < height; ++j)
    for (std::int64_t i = 0; i < width; ++i) {
      Orientation o;
      if (max_run == 1) {
        o = (i + j) % 2 == 0 ? Orientation::Horizontal : Orientation::Vertical;
      } else {
        const std::int64_t ai = i - i % 2, aj = j - j % 2;
        if (ai % period == aj % period) {
          // forced checkerboard; odd bounds pin one type, even bounds pick
          // per square so the pattern does not read as a lattice
          const bool flip =
              max_run % 2 == 0 &&
              (hash_cell(ai, aj, StreamTag::SolverChoice, seed) & 1);
          const bool anchor_horizontal = ((i - ai) + (j - aj)) % 2 == 0;
          o = anchor_horizontal != flip ? Orientation::Horizontal
                                        : Orientation::Vertical;
        } else {
          o = coin(i, j, seed);
        }
      }
      d.cells[static_cast<std::size_t>(j * width + i)] = o;
    }
  return d;
}

Dappling make_random_dappling(std::int64_t width, std::int64_t height,
                              std::uint64_t seed) {
  if (width <= 0 || height <= 0)
    throw std::invalid_argument("make_random_dappling: dimensions must be positive");
  Dappling d{.width = width, .height = height, .cyclic = false};
  d.cells.resize(static_cast<std::size_t>(width * height));
  for (std::int64_t j = 0; j < height; ++j)
    for (std::int64_t i = 0; i < width; ++i)
      d.cells[static_cast<std::size_t>(j * width + i)] = coin(i, j, seed);
  return d;
}

void color_row(std::int64_t j, const Dappling& d, EdgeColor c, GridTiling& g) {
  const std::int64_t w = g.width;
  std::int64_t last = -1, second = -1;
  for (std::int64_t i = w - 1; i >= 0 && second < 0; --i)
    if (d.at(i, j) == Orientation::Vertical) (last < 0 ? last : second) = i;
  if (second < 0)
    throw std::runtime_error("color_row: row " + std::to_string(j) +
                             " has fewer than two vertical cells");

  g.v_at(0, j) = c;
  EdgeColor cur = c;
  for (std::int64_t i = 0; i < w; ++i) {
    if (d.at(i, j) == Orientation::Vertical) {
      if (i == second)
        cur = diff2(i, j, cur, c, StreamTag::VEdge, g.params);
      else if (i == last)
        cur = c;
      else
        cur = diff1(i, j, cur, StreamTag::VEdge, g.params);
    }
    g.v_at(i + 1, j) = cur;
  }
}

void color_col(std::int64_t i, const Dappling& d, EdgeColor c, GridTiling& g) {
  const std::int64_t h = g.height;
  std::int64_t last = -1, second = -1;
  for (std::int64_t j = h - 1; j >= 0 && second < 0; --j)
    if (d.at(i, j) == Orientation::Horizontal) (last < 0 ? last : second) = j;
  if (second < 0)
    throw std::runtime_error("color_col: column " + std::to_string(i) +
                             " has fewer than two horizontal cells");

  g.h_at(i, 0) = c;
  EdgeColor cur = c;
  for (std::int64_t j = 0; j < h; ++j) {
    if (d.at(i, j) == Orientation::Horizontal) {
      if (j == second)
        cur = diff2(i, j, cur, c, StreamTag::HEdge, g.params);
      else if (j == last)
        cur = c;
      else
        cur = diff1(i, j, cur, StreamTag::HEdge, g.params);
    }
    g.h_at(i, j + 1) = cur;
  }
}

GridTiling build_grid(std::int64_t width, std::int64_t height,
                      const WallParams& params) {
  if (!params.valid())
    throw std::invalid_argument("build_grid: invalid wall parameters");
  const Dappling d =
      params.max_run
          ? make_cyclic_dappling(width, height, *params.max_run, params.seed)
          : make_random_dappling(width, height, params.seed);

  GridTiling g{.width = width, .height = height, .params = params};
  g.v_edges.assign(static_cast<std::size_t>((width + 1) * height), 0);
  g.h_edges.assign(static_cast<std::size_t>(width * (height + 1)), 0);
  const auto nc = static_cast<std::uint64_t>(params.n_colors);
  g.border_color_v = static_cast<EdgeColor>(
      hash_cell(-1, -1, StreamTag::VEdge, params.seed) % nc);
  g.border_color_h = static_cast<EdgeColor>(
      hash_cell(-1, -1, StreamTag::HEdge, params.seed) % nc);

  for (std::int64_t j = 0; j < height; ++j)
    color_row(j, d, g.border_color_v, g);
  for (std::int64_t i = 0; i < width; ++i)
    color_col(i, d, g.border_color_h, g);
  return g;
}

void save_grid(const GridTiling& g, std::ostream& out) {
  out << "wallgrid 1\n";
  out << g.width << ' ' << g.height << ' ' << g.params.n_colors << ' ';
  if (g.params.max_run)
    out << *g.params.max_run;
  else
    out << "inf";
  out << ' ' << g.params.seed << '\n';
  out << g.border_color_v << ' ' << g.border_color_h << '\n';
  for (std::int64_t j = 0; j <= g.height; ++j) {
    for (std::int64_t i = 0; i < g.width; ++i)
      out << g.h_at(i, j) << (i + 1 < g.width ? ' ' : '\n');
  }
  for (std::int64_t j = 0; j < g.height; ++j) {
    for (std::int64_t i = 0; i <= g.width; ++i)
      out << g.v_at(i, j) << (i < g.width ? ' ' : '\n');
  }
}

namespace {

[[noreturn]] void bad_grid(const std::string& what) {
  throw std::runtime_error("load_grid: " + what);
}

}  // namespace

GridTiling load_grid(std::istream& in) {
  std::string magic, version;
  if (!(in >> magic >> version) || magic != "wallgrid" || version != "1")
    bad_grid("not a wallgrid file");

  GridTiling g;
  std::string run_token;
  std::int64_t n_colors = 0;
  if (!(in >> g.width >> g.height >> n_colors >> run_token >> g.params.seed))
    bad_grid("truncated header");
  constexpr std::int64_t kMaxDim = 1 << 20;
  if (g.width < 1 || g.height < 1 || g.width > kMaxDim || g.height > kMaxDim)
    bad_grid("unreasonable dimensions");
  if (n_colors < 3 || n_colors > std::numeric_limits<EdgeColor>::max())
    bad_grid("color count out of range");
  g.params.n_colors = static_cast<int>(n_colors);
  if (run_token == "inf") {
    g.params.max_run = {};
  } else {
    try {
      g.params.max_run = std::stoi(run_token);
    } catch (const std::exception&) {
      bad_grid("malformed run bound");
    }
    if (*g.params.max_run < 1) bad_grid("run bound out of range");
  }

  const auto read_color = [&](EdgeColor& c, const char* where) {
    std::int64_t value = 0;
    if (!(in >> value)) bad_grid(std::string("truncated ") + where);
    if (value < 0 || value >= n_colors)
      bad_grid(std::string("edge color out of range in ") + where);
    c = static_cast<EdgeColor>(value);
  };

  read_color(g.border_color_v, "header");
  read_color(g.border_color_h, "header");
  g.h_edges.resize(static_cast<std::size_t>(g.width * (g.height + 1)));
  g.v_edges.resize(static_cast<std::size_t>((g.width + 1) * g.height));
  for (auto& c : g.h_edges) read_color(c, "h edges");
  for (auto& c : g.v_edges) read_color(c, "v edges");
  return g;
}

}  // namespace wallgen
