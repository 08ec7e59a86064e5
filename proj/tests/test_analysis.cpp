#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "wallgen/analysis.hpp"
#include "wallgen/geometry.hpp"
#include "wallgen/grid.hpp"

namespace {

using namespace wallgen;

WallParams with_run(std::optional<int> run, int colors, std::uint64_t seed) {
  WallParams p;
  p.max_run = run;
  p.n_colors = colors;
  p.seed = seed;
  return p;
}

std::int64_t max_key(const std::map<std::int64_t, std::int64_t>& m) {
  return m.empty() ? 0 : m.rbegin()->first;
}

std::int64_t weighted_cells(const RunHistogram& h) {
  std::int64_t cells = 0;
  for (const auto& kv : h.counts) cells += kv.first * kv.second;
  for (const auto& kv : h.truncated) cells += kv.first * kv.second;
  return cells;
}

std::map<std::int64_t, std::int64_t> pooled_counts(const CachedWall& wall,
                                                   CellIndex origin,
                                                   std::int64_t w,
                                                   std::int64_t h) {
  const auto rows = run_histogram(wall, origin, w, h, RunAxis::RowsHorizontal);
  const auto cols = run_histogram(wall, origin, w, h, RunAxis::ColsVertical);
  std::map<std::int64_t, std::int64_t> pooled = rows.counts;
  for (const auto& kv : cols.counts) pooled[kv.first] += kv.second;
  return pooled;
}

}  // namespace

TEST_CASE("bounded window scans are clean and respect the run bound") {
  const CachedWall wall(with_run(2, 3, 7));
  const auto report = validate_window(wall, {-256, -256}, 512, 512);
  CHECK(report.cells_scanned == 512 * 512);
  CHECK(report.ok());
  CHECK(report.violations.empty());
  CHECK(report.max_h_run <= 2);
  CHECK(report.max_v_run <= 2);
  CHECK(report.max_h_run >= 1);
}

TEST_CASE("unbounded window scans are clean") {
  const auto report =
      validate_window(with_run(std::nullopt, 3, 19), {-100, -300}, 512, 512);
  CHECK(report.cells_scanned == 512 * 512);
  CHECK(report.ok());
  CHECK(report.max_h_run > 2);
  CHECK(report.max_v_run > 2);
}

TEST_CASE("grid validation accepts built grids including the wrap") {
  const GridTiling g = build_grid(64, 64, with_run(2, 3, 11));
  const auto report = validate_grid(g);
  CHECK(report.ok());
  CHECK(report.cells_scanned == 64 * 64);
  CHECK(report.max_h_run <= 2);
  CHECK(report.max_v_run <= 2);

  const GridTiling g5 = build_grid(60, 60, with_run(5, 4, 3));
  const auto r5 = validate_grid(g5);
  CHECK(r5.ok());
  CHECK(r5.max_h_run <= 5);
  CHECK(r5.max_v_run <= 5);
}

TEST_CASE("a flipped stored edge is reported at the offending cells") {
  GridTiling g = build_grid(48, 48, with_run(2, 3, 11));
  std::int64_t fi = -1, fj = -1;
  for (std::int64_t j = 0; j < g.height && fi < 0; ++j)
    for (std::int64_t i = 0; i + 1 < g.width; ++i)
      if (g.h_at(i, j) != g.h_at(i, j + 1)) {
        fi = i;
        fj = j;
        break;
      }
  REQUIRE(fi >= 0);
  g.v_at(fi + 1, fj) = (g.v_at(fi + 1, fj) + 1) % g.params.n_colors;

  const auto report = validate_grid(g);
  REQUIRE_FALSE(report.ok());
  bool flagged = false;
  for (const Violation& v : report.violations) {
    const bool left = v.cell.i == fi && v.cell.j == fj;
    const bool right = v.cell.i == fi + 1 && v.cell.j == fj;
    CHECK((left || right));
    if (left) {
      CHECK(v.kind == ViolationKind::ExtraBrick);
      flagged = true;
    }
  }
  CHECK(flagged);
}

TEST_CASE("a broken repeat border is reported as a mismatch") {
  GridTiling g = build_grid(32, 32, with_run(std::nullopt, 3, 4));
  g.v_at(g.width, 5) = (g.v_at(g.width, 5) + 1) % g.params.n_colors;
  const auto report = validate_grid(g);
  REQUIRE_FALSE(report.ok());
  bool mismatch = false;
  for (const Violation& v : report.violations)
    if (v.kind == ViolationKind::EdgeMismatch) {
      CHECK(v.cell.i == g.width);
      CHECK(v.cell.j == 5);
      mismatch = true;
    }
  CHECK(mismatch);
}

TEST_CASE("run histograms stay under the bound without piling on the cap") {
  const CachedWall wall(with_run(4, 3, 23));
  for (const RunAxis axis : {RunAxis::RowsHorizontal, RunAxis::ColsVertical}) {
    const auto hist = run_histogram(wall, {0, 0}, 1000, 1000, axis);
    CHECK(hist.cells_scanned == 1000 * 1000);
    CHECK(max_key(hist.counts) <= 4);
    CHECK(max_key(hist.truncated) <= 4);
    CHECK(hist.counts.at(4) < hist.counts.at(3));
    CHECK(weighted_cells(hist) == hist.axis_cells);
  }
}

TEST_CASE("loose bounds decay monotonically") {
  const CachedWall wall(with_run(10, 3, 29));
  const auto pooled = pooled_counts(wall, {-500, -500}, 1000, 1000);
  CHECK(max_key(pooled) == 10);
  for (std::int64_t k = 1; k < 10; ++k) {
    REQUIRE(pooled.count(k) == 1);
    CHECK(pooled.at(k) > pooled.at(k + 1));
  }
}

TEST_CASE("unbounded run lengths follow a halving law") {
  const CachedWall wall(with_run(std::nullopt, 3, 31));
  const auto rows = run_histogram(wall, {0, 0}, 1000, 1000, RunAxis::RowsHorizontal);
  const auto cols = run_histogram(wall, {0, 0}, 1000, 1000, RunAxis::ColsVertical);
  std::map<std::int64_t, std::int64_t> pooled = rows.counts;
  for (const auto& kv : cols.counts) pooled[kv.first] += kv.second;
  double total = 0.0;
  for (const auto& kv : pooled) total += static_cast<double>(kv.second);
  REQUIRE(total > 100000.0);
  for (std::int64_t k = 1; k <= 6; ++k) {
    const double p = static_cast<double>(pooled.at(k)) / total;
    // Interior solutions anticorrelate adjacent orientations, which feeds a
    // small surplus of singleton runs; longer lengths sit on the ideal curve.
    const double slack = k == 1 ? 0.02 : 0.01;
    CHECK(std::abs(p - std::pow(2.0, -static_cast<double>(k))) <= slack);
  }
}

TEST_CASE("mass conservation holds per axis") {
  for (const auto& params :
       {with_run(3, 3, 8), with_run(std::nullopt, 4, 9), with_run(1, 3, 2)}) {
    const CachedWall wall(params);
    const auto rows = run_histogram(wall, {-37, 11}, 256, 256, RunAxis::RowsHorizontal);
    const auto cols = run_histogram(wall, {-37, 11}, 256, 256, RunAxis::ColsVertical);
    CHECK(weighted_cells(rows) == rows.axis_cells);
    CHECK(weighted_cells(cols) == cols.axis_cells);
    CHECK(rows.axis_cells + cols.axis_cells == 256 * 256);
  }
}

TEST_CASE("long line frequency: bound three kills it, bound four caps it") {
  const CachedWall w3(with_run(3, 3, 13));
  CHECK(long_line_frequency(w3, {0, 0}, 512, 512) == 0.0);

  const CachedWall w4(with_run(4, 3, 23));
  const double f4 = long_line_frequency(w4, {0, 0}, 1000, 1000);
  const auto pooled = pooled_counts(w4, {0, 0}, 1000, 1000);
  double total = 0.0;
  for (const auto& kv : pooled) total += static_cast<double>(kv.second);
  CHECK(f4 == doctest::Approx(static_cast<double>(pooled.at(4)) / total)
                  .epsilon(1e-12));
  CHECK(f4 < 0.125);
}

TEST_CASE("unbounded walls keep about an eighth of their lines long") {
  const CachedWall wall(with_run(std::nullopt, 3, 0));
  const double f = long_line_frequency(wall, {0, 0}, 1000, 1000);
  CHECK(f > 0.125 - 0.01);
  CHECK(f < 0.125 + 0.01);

  const CachedWall other(with_run(std::nullopt, 3, 1));
  const double g = long_line_frequency(other, {0, 0}, 1000, 1000);
  CHECK(g > 0.125 - 0.01);
  CHECK(g < 0.125 + 0.01);
}

TEST_CASE("procedural and grid run distributions agree") {
  const WallParams params = with_run(2, 3, 5);
  const CachedWall wall(params);
  const GridTiling g = build_grid(500, 500, params);
  const GridField field(g);
  for (const RunAxis axis : {RunAxis::RowsHorizontal, RunAxis::ColsVertical}) {
    const auto proc = run_histogram(wall, {0, 0}, 1000, 1000, axis);
    const auto grid = run_histogram(field, {0, 0}, 1000, 1000, axis);
    CHECK(total_variation(proc, grid) <= 0.05);
  }
}

TEST_CASE("total variation is a metric on normalized counts") {
  RunHistogram a, b;
  a.counts = {{1, 10}, {2, 10}};
  b.counts = {{1, 10}, {2, 10}};
  CHECK(total_variation(a, b) == 0.0);
  b.counts = {{3, 7}};
  CHECK(total_variation(a, b) == doctest::Approx(1.0));
  b.counts = {{1, 10}, {3, 10}};
  CHECK(total_variation(a, b) == doctest::Approx(0.5));
  CHECK(total_variation(a, b) == total_variation(b, a));
}

namespace {

// Matches oracle boxes against the closed-form rectangles; returns matched ids.
std::vector<BrickId> check_oracle_window(const CachedWall& wall, CellIndex origin,
                                         std::int64_t w, std::int64_t h) {
  const auto report = oracle_bricks(wall, origin, w, h, 16);
  CHECK(report.non_rectangular == 0);
  CHECK(report.components > (w - 2) * (h - 2) / 2);
  const double tol = (0.5 + 1e-6) * report.raster_step;

  std::vector<BrickId> ids;
  for (const OracleBrick& brick : report.bricks) {
    CHECK(brick.box.width() > 0.0);
    CHECK(brick.box.height() > 0.0);
    if (brick.touches_border) continue;
    CHECK(brick.box.width() < 2.0);
    CHECK(brick.box.height() < 2.0);
    const BrickId id = locate_brick(wall, brick.box.center());
    const BrickRect truth = brick_rect(wall, id);
    CHECK(std::abs(brick.box.x_left - truth.x_left) <= tol);
    CHECK(std::abs(brick.box.x_right - truth.x_right) <= tol);
    CHECK(std::abs(brick.box.y_bottom - truth.y_bottom) <= tol);
    CHECK(std::abs(brick.box.y_top - truth.y_top) <= tol);
    ids.push_back(id);
  }
  auto key = [](const BrickId& b) { return std::pair(b.i, b.j); };
  std::sort(ids.begin(), ids.end(),
            [&](const BrickId& x, const BrickId& y) { return key(x) < key(y); });
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
  return ids;
}

}  // namespace

TEST_CASE("the raster oracle reproduces the closed-form bricks") {
  const CachedWall bounded(with_run(2, 3, 7));
  const auto ids = check_oracle_window(bounded, {-32, -32}, 64, 64);
  CHECK(ids.size() > 1000);

  const CachedWall unbounded(with_run(std::nullopt, 4, 41));
  check_oracle_window(unbounded, {10, -20}, 32, 32);
}

TEST_CASE("every interior junction touches exactly three bricks") {
  const CachedWall wall(with_run(std::nullopt, 3, 17));
  const auto report = oracle_bricks(wall, {0, 0}, 48, 48, 16);
  REQUIRE(report.non_rectangular == 0);
  const double pad = 1.001 * report.raster_step;

  int checked = 0;
  for (const OracleBrick& brick : report.bricks) {
    if (brick.touches_border) continue;
    const Point q{brick.box.x_left, brick.box.y_bottom};
    if (q.x < 2.0 || q.x > 46.0 || q.y < 2.0 || q.y > 46.0) continue;
    int incident = 0;
    for (const OracleBrick& other : report.bricks) {
      const BrickRect& r = other.box;
      if (q.x >= r.x_left - pad && q.x <= r.x_right + pad &&
          q.y >= r.y_bottom - pad && q.y <= r.y_top + pad)
        ++incident;
    }
    CHECK(incident == 3);
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("histogram exports use stable field names") {
  const CachedWall wall(with_run(2, 3, 7));
  const auto hist = run_histogram(wall, {0, 0}, 64, 64, RunAxis::ColsVertical);

  const std::string csv = histogram_csv(hist);
  CHECK(csv.rfind("length,count,truncated\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= 3);

  const auto doc = nlohmann::json::parse(histogram_json(hist));
  CHECK(doc["axis"] == "cols-vertical");
  CHECK(doc["cells_scanned"] == 64 * 64);
  CHECK(doc["axis_cells"].get<std::int64_t>() == hist.axis_cells);
  CHECK(doc["counts"]["2"].get<std::int64_t>() == hist.counts.at(2));
  CHECK(doc.contains("truncated"));
}

TEST_CASE("validity reports serialize violations with their kinds") {
  GridTiling g = build_grid(16, 16, with_run(2, 3, 11));
  g.v_at(g.width, 2) = (g.v_at(g.width, 2) + 1) % 3;
  const auto doc = nlohmann::json::parse(report_json(validate_grid(g)));
  CHECK(doc["cells_scanned"] == 16 * 16);
  CHECK(doc["ok"] == false);
  CHECK(doc["max_h_run"].get<std::int64_t>() <= 2);
  REQUIRE(doc["violations"].is_array());
  REQUIRE(doc["violations"].size() >= 1);
  bool mismatch = false;
  for (const auto& v : doc["violations"])
    if (v["kind"] == "edge-mismatch") {
      CHECK(v["i"] == 16);
      CHECK(v["j"] == 2);
      mismatch = true;
    }
  CHECK(mismatch);

  const auto clean = nlohmann::json::parse(
      report_json(validate_window(with_run(2, 3, 7), {0, 0}, 32, 32)));
  CHECK(clean["ok"] == true);
  CHECK(clean["violations"].empty());
}
