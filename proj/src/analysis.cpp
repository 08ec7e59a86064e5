#include "wallgen/analysis.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wallgen {
namespace {

// Longest run of `want` in a cyclic lane; anything else breaks the run.
std::int64_t cyclic_max_run(const std::vector<int>& lane, int want) {
  const auto n = static_cast<std::int64_t>(lane.size());
  bool uniform = true;
  for (const int c : lane) uniform &= c == want;
  if (uniform) return n;
  std::int64_t best = 0, run = 0;
  for (std::int64_t k = 0; k < 2 * n; ++k) {
    run = lane[static_cast<std::size_t>(k % n)] == want ? run + 1 : 0;
    best = std::max(best, run);
  }
  return std::min(best, n);
}

int classify_stored(const GridTiling& g, std::int64_t i, std::int64_t j) {
  const auto o =
      classify(g.h_at(i, j), g.h_at(i, j + 1), g.v_at(i, j), g.v_at(i + 1, j));
  if (!o) return g.h_at(i, j) == g.h_at(i, j + 1) ? -2 : -1;
  return *o == Orientation::Horizontal ? 0 : 1;
}

}  // namespace

ValidityReport validate_grid(const GridTiling& g) {
  ValidityReport report;
  report.cells_scanned = g.width * g.height;
  std::vector<std::vector<int>> cells(
      static_cast<std::size_t>(g.height),
      std::vector<int>(static_cast<std::size_t>(g.width)));

  for (std::int64_t j = 0; j < g.height; ++j)
    for (std::int64_t i = 0; i < g.width; ++i) {
      const int c = classify_stored(g, i, j);
      cells[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
      if (c < 0)
        report.violations.push_back(
            {{i, j}, c == -2 ? ViolationKind::Cross : ViolationKind::ExtraBrick});
    }

  for (std::int64_t j = 0; j < g.height; ++j)
    if (g.v_at(0, j) != g.v_at(g.width, j))
      report.violations.push_back({{g.width, j}, ViolationKind::EdgeMismatch});
  for (std::int64_t i = 0; i < g.width; ++i)
    if (g.h_at(i, 0) != g.h_at(i, g.height))
      report.violations.push_back({{i, g.height}, ViolationKind::EdgeMismatch});

  std::vector<int> lane;
  for (std::int64_t j = 0; j < g.height; ++j)
    report.max_h_run = std::max(
        report.max_h_run, cyclic_max_run(cells[static_cast<std::size_t>(j)], 0));
  lane.resize(static_cast<std::size_t>(g.height));
  for (std::int64_t i = 0; i < g.width; ++i) {
    for (std::int64_t j = 0; j < g.height; ++j)
      lane[static_cast<std::size_t>(j)] =
          cells[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    report.max_v_run = std::max(report.max_v_run, cyclic_max_run(lane, 1));
  }
  return report;
}

double total_variation(const RunHistogram& a, const RunHistogram& b) {
  const double ta = static_cast<double>(a.total_runs());
  const double tb = static_cast<double>(b.total_runs());
  std::set<std::int64_t> lengths;
  for (const auto& [len, n] : a.counts) lengths.insert(len);
  for (const auto& [len, n] : b.counts) lengths.insert(len);
  double dist = 0.0;
  for (const std::int64_t len : lengths) {
    const auto ia = a.counts.find(len);
    const auto ib = b.counts.find(len);
    const double pa = ia == a.counts.end() || ta == 0.0
                          ? 0.0
                          : static_cast<double>(ia->second) / ta;
    const double pb = ib == b.counts.end() || tb == 0.0
                          ? 0.0
                          : static_cast<double>(ib->second) / tb;
    dist += std::abs(pa - pb);
  }
  return dist / 2.0;
}

namespace detail {

namespace {

std::int64_t snap(double world, double origin, double step) {
  const double exact = (world - origin) / step;
  const auto px = static_cast<std::int64_t>(std::llround(exact));
  if (std::abs(exact - static_cast<double>(px)) >= 0.499)
    throw std::invalid_argument(
        "oracle raster: line offsets alias with the sample grid; raise "
        "samples_per_cell");
  return px;
}

}  // namespace

void mark_h_segment(std::vector<std::uint8_t>& wall, std::int64_t px_w,
                    std::int64_t px_h, double x0, double y0, double step,
                    double y, double x_from, double x_to) {
  const std::int64_t py = snap(y, y0, step);
  if (py < 0 || py >= px_h) return;
  const std::int64_t a = std::max<std::int64_t>(0, snap(x_from, x0, step));
  const std::int64_t b = std::min(px_w - 1, snap(x_to, x0, step));
  for (std::int64_t px = a; px <= b; ++px)
    wall[static_cast<std::size_t>(py * px_w + px)] = 1;
}

void mark_v_segment(std::vector<std::uint8_t>& wall, std::int64_t px_w,
                    std::int64_t px_h, double x0, double y0, double step,
                    double x, double y_from, double y_to) {
  const std::int64_t px = snap(x, x0, step);
  if (px < 0 || px >= px_w) return;
  const std::int64_t a = std::max<std::int64_t>(0, snap(y_from, y0, step));
  const std::int64_t b = std::min(px_h - 1, snap(y_to, y0, step));
  for (std::int64_t py = a; py <= b; ++py)
    wall[static_cast<std::size_t>(py * px_w + px)] = 1;
}

OracleReport flood_boxes(const std::vector<std::uint8_t>& wall, std::int64_t px_w,
                         std::int64_t px_h, double x0, double y0, double step) {
  OracleReport report;
  std::vector<std::uint8_t> seen(wall.size(), 0);
  std::vector<std::int64_t> stack;

  for (std::int64_t start = 0; start < px_w * px_h; ++start) {
    const auto s0 = static_cast<std::size_t>(start);
    if (wall[s0] || seen[s0]) continue;
    std::int64_t lo_x = px_w, hi_x = -1, lo_y = px_h, hi_y = -1, pixels = 0;
    stack.push_back(start);
    seen[s0] = 1;
    while (!stack.empty()) {
      const std::int64_t p = stack.back();
      stack.pop_back();
      const std::int64_t px = p % px_w, py = p / px_w;
      ++pixels;
      lo_x = std::min(lo_x, px);
      hi_x = std::max(hi_x, px);
      lo_y = std::min(lo_y, py);
      hi_y = std::max(hi_y, py);
      const std::int64_t next[4] = {p - 1, p + 1, p - px_w, p + px_w};
      const bool open[4] = {px > 0, px < px_w - 1, py > 0, py < px_h - 1};
      for (int k = 0; k < 4; ++k) {
        if (!open[k]) continue;
        const auto sn = static_cast<std::size_t>(next[k]);
        if (wall[sn] || seen[sn]) continue;
        seen[sn] = 1;
        stack.push_back(next[k]);
      }
    }

    OracleBrick brick;
    brick.pixels = pixels;
    brick.touches_border =
        lo_x == 0 || lo_y == 0 || hi_x == px_w - 1 || hi_y == px_h - 1;
    if (pixels != (hi_x - lo_x + 1) * (hi_y - lo_y + 1)) ++report.non_rectangular;
    brick.box.x_left =
        lo_x > 0 ? x0 + static_cast<double>(lo_x - 1) * step : x0;
    brick.box.x_right = hi_x < px_w - 1
                            ? x0 + static_cast<double>(hi_x + 1) * step
                            : x0 + static_cast<double>(px_w) * step;
    brick.box.y_bottom =
        lo_y > 0 ? y0 + static_cast<double>(lo_y - 1) * step : y0;
    brick.box.y_top = hi_y < px_h - 1
                          ? y0 + static_cast<double>(hi_y + 1) * step
                          : y0 + static_cast<double>(px_h) * step;
    report.bricks.push_back(brick);
    ++report.components;
  }
  return report;
}

}  // namespace detail

namespace {

const char* axis_name(RunAxis axis) {
  return axis == RunAxis::RowsHorizontal ? "rows-horizontal" : "cols-vertical";
}

const char* kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Cross: return "cross";
    case ViolationKind::ExtraBrick: return "extra-brick";
    case ViolationKind::EdgeMismatch: return "edge-mismatch";
  }
  return "unknown";
}

nlohmann::json count_map(const std::map<std::int64_t, std::int64_t>& m) {
  auto obj = nlohmann::json::object();
  for (const auto& [len, n] : m) obj[std::to_string(len)] = n;
  return obj;
}

}  // namespace

std::string histogram_csv(const RunHistogram& hist) {
  std::set<std::int64_t> lengths;
  for (const auto& [len, n] : hist.counts) lengths.insert(len);
  for (const auto& [len, n] : hist.truncated) lengths.insert(len);
  std::ostringstream out;
  out << "length,count,truncated\n";
  for (const std::int64_t len : lengths) {
    const auto c = hist.counts.find(len);
    const auto t = hist.truncated.find(len);
    out << len << ',' << (c == hist.counts.end() ? 0 : c->second) << ','
        << (t == hist.truncated.end() ? 0 : t->second) << '\n';
  }
  return out.str();
}

std::string histogram_json(const RunHistogram& hist) {
  nlohmann::json doc{{"axis", axis_name(hist.axis)},
                     {"cells_scanned", hist.cells_scanned},
                     {"axis_cells", hist.axis_cells},
                     {"counts", count_map(hist.counts)},
                     {"truncated", count_map(hist.truncated)}};
  return doc.dump(2) + "\n";
}

std::string report_json(const ValidityReport& report) {
  auto violations = nlohmann::json::array();
  for (const Violation& v : report.violations)
    violations.push_back(
        {{"i", v.cell.i}, {"j", v.cell.j}, {"kind", kind_name(v.kind)}});
  nlohmann::json doc{{"cells_scanned", report.cells_scanned},
                     {"ok", report.ok()},
                     {"max_h_run", report.max_h_run},
                     {"max_v_run", report.max_v_run},
                     {"violations", violations}};
  return doc.dump(2) + "\n";
}

}  // namespace wallgen
