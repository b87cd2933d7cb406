#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taugrav/bodies.hpp"
#include "taugrav/instability.hpp"
#include "taugrav/interferometer.hpp"

namespace taugrav {

// One experiment of the instability-time ranking. Either a geometric
// description (superposition + probe) or an interferometer gain setting
// (the microwave Mach-Zehnder row, which has no probe geometry).
struct ExperimentEntry {
  std::string name;
  std::optional<SuperpositionState> superposition;
  std::optional<ProbeDensity> probe;
  std::optional<double> interferometer_gain_db;
  std::optional<CoaxSpec> coax;
  std::optional<double> flight_time;  // s, the experiment's coherence window
  std::optional<double> table_tau;    // s, published value for regression
  std::string provenance_notes;

  void validate() const;
};

InstabilityResult compute_entry(const ExperimentEntry& e,
                                const PhysicalConstants& k = codata2018(),
                                const QuadratureBudget& budget = {});

struct CatalogRow {
  std::string name;
  InstabilityResult result;
  std::optional<double> table_tau;
  std::optional<double> ratio;        // computed / table
  std::optional<double> flight_time;
  std::string verdict;  // "stable during flight" / "unstable during flight"
};

struct CatalogReport {
  std::vector<CatalogRow> rows;  // sorted by computed tau, descending
};

CatalogReport rank_catalog(const std::vector<ExperimentEntry>& entries,
                           const PhysicalConstants& k = codata2018(),
                           const QuadratureBudget& budget = {});

std::string report_table(const CatalogReport& report);
std::string report_csv(const CatalogReport& report);

}  // namespace taugrav
