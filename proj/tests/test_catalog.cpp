#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>

#include "taugrav/catalog.hpp"
#include "taugrav/config_io.hpp"

using namespace taugrav;

namespace {
const PhysicalConstants k = codata2018();
const std::string kCatalogDir = TAUGRAV_CATALOG_DIR;

ExperimentEntry find_entry(const std::vector<ExperimentEntry>& entries,
                           const std::string& needle) {
  for (const auto& e : entries)
    if (e.name.find(needle) != std::string::npos) return e;
  FAIL("no catalog entry matching ", needle);
  return {};
}
}  // namespace

TEST_CASE("shipped catalog loads and validates") {
  const auto entries = load_catalog_dir(kCatalogDir);
  CHECK(entries.size() == 9);
  for (const auto& e : entries) {
    CHECK_NOTHROW(e.validate());
    CHECK_FALSE(e.provenance_notes.empty());
    REQUIRE(e.table_tau.has_value());
  }
}

TEST_CASE("fullerene entry reproduces the published timescale") {
  const auto entries = load_catalog_dir(kCatalogDir);
  const auto e = find_entry(entries, "fullerene");
  const auto r = compute_entry(e, k);
  REQUIRE_FALSE(r.infinite);
  CHECK(r.tau / 2e8 > 1.0 / 3.0);
  CHECK(r.tau / 2e8 < 3.0);
  CHECK(r.quadrature_error < 1e-3);
}

TEST_CASE("micromirror entry lands within an order of magnitude") {
  const auto entries = load_catalog_dir(kCatalogDir);
  const auto e = find_entry(entries, "micromirror");
  const auto r = compute_entry(e, k);
  REQUIRE_FALSE(r.infinite);
  CHECK(std::abs(std::log10(r.tau / *e.table_tau)) < 1.0);
}

TEST_CASE("zero superposition displacement never destabilizes") {
  auto entries = load_catalog_dir(kCatalogDir);
  auto e = find_entry(entries, "sodium");
  // collapse both branches onto the first branch's geometry
  e.superposition->branches[1].config =
      e.superposition->branches[0].config;
  CHECK(compute_entry(e, k).infinite);
}

TEST_CASE("full ranking reproduces the published ordering") {
  const auto entries = load_catalog_dir(kCatalogDir);
  const auto report = rank_catalog(entries, k);
  REQUIRE(report.rows.size() == 9);
  double prev_table = 1e300;
  for (const auto& row : report.rows) {
    REQUIRE_FALSE(row.result.infinite);
    REQUIRE(row.table_tau.has_value());
    CHECK(*row.table_tau <= prev_table);  // computed order == table order
    prev_table = *row.table_tau;
    REQUIRE(row.ratio.has_value());
    CHECK(std::abs(std::log10(*row.ratio)) < 1.0);
  }
}

TEST_CASE("flight-time verdict for the fullerene row") {
  const auto entries = load_catalog_dir(kCatalogDir);
  const auto report = rank_catalog(entries, k);
  bool found = false;
  for (const auto& row : report.rows)
    if (row.name.find("fullerene") != std::string::npos) {
      found = true;
      CHECK(row.verdict == "stable during flight");
      REQUIRE(row.flight_time.has_value());
      CHECK(row.result.tau > *row.flight_time);
    }
  CHECK(found);
}

TEST_CASE("single entry gives a single-row report") {
  const auto entries = load_catalog_dir(kCatalogDir);
  const auto report = rank_catalog({entries.front()}, k);
  CHECK(report.rows.size() == 1);
}

TEST_CASE("serialization round trip preserves the computed timescale") {
  const auto entries = load_catalog_dir(kCatalogDir);
  for (const auto& e : entries) {
    const auto back = entry_from_json(to_json(e));
    CHECK(compute_entry(back, k).tau == compute_entry(e, k).tau);
  }
}

TEST_CASE("catalog computation is deterministic") {
  const auto entries = load_catalog_dir(kCatalogDir);
  const auto a = rank_catalog(entries, k);
  const auto b = rank_catalog(entries, k);
  CHECK(report_csv(a) == report_csv(b));
}

TEST_CASE("reports carry headers") {
  const auto entries = load_catalog_dir(kCatalogDir);
  const auto report = rank_catalog(entries, k);
  CHECK(report_table(report).find("experiment") == 0);
  CHECK(report_csv(report).find(
            "experiment,tau_s,table_tau_s,ratio,quad_rel_error,verdict\n") ==
        0);
}

TEST_CASE("entry validation") {
  ExperimentEntry e;
  e.name = "x";
  CHECK_THROWS_AS(e.validate(), ConfigError);  // neither geometry nor gain
  e.interferometer_gain_db = 100.0;
  CHECK_NOTHROW(e.validate());
  e.table_tau = -1.0;
  CHECK_THROWS_AS(e.validate(), ConfigError);
  CHECK_THROWS_AS(rank_catalog({}, k), ConfigError);
}
