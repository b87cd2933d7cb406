#include "taugrav/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace taugrav {

void ExperimentEntry::validate() const {
  if (name.empty()) throw ConfigError("catalog entry needs a name");
  const bool geometric = superposition.has_value() && probe.has_value();
  const bool amplified = interferometer_gain_db.has_value();
  if (geometric == amplified)
    throw ConfigError(
        "entry must have either superposition+probe or an interferometer "
        "gain, not both: " + name);
  if (geometric) {
    superposition->validate();
    probe->validate();
  }
  if (table_tau && !(*table_tau > 0.0))
    throw ConfigError("table_tau must be > 0: " + name);
}

InstabilityResult compute_entry(const ExperimentEntry& e,
                                const PhysicalConstants& k,
                                const QuadratureBudget& budget) {
  e.validate();
  if (e.interferometer_gain_db) {
    const double gain = std::pow(10.0, *e.interferometer_gain_db / 10.0);
    const CoaxSpec coax = e.coax.value_or(CoaxSpec{});
    InstabilityResult r;
    r.infinite = false;
    r.formula = Formula::DensityMultiBranch;
    r.tau = tau_vs_gain(gain, coax, k);
    r.denominator = 3.14159265358979323846 * k.hbar / r.tau;
    return r;
  }
  if (e.superposition->branches.size() == 2)
    return tau_density(*e.probe, *e.superposition, k, budget);
  return tau_density_multibranch(*e.probe, *e.superposition, k, budget);
}

CatalogReport rank_catalog(const std::vector<ExperimentEntry>& entries,
                           const PhysicalConstants& k,
                           const QuadratureBudget& budget) {
  if (entries.empty()) throw ConfigError("catalog is empty");
  CatalogReport report;
  for (const auto& e : entries) {
    CatalogRow row;
    row.name = e.name;
    row.result = compute_entry(e, k, budget);
    row.table_tau = e.table_tau;
    row.flight_time = e.flight_time;
    if (e.table_tau && !row.result.infinite)
      row.ratio = row.result.tau / *e.table_tau;
    if (e.flight_time) {
      const bool stable =
          row.result.infinite || row.result.tau > *e.flight_time;
      row.verdict = stable ? "stable during flight" : "unstable during flight";
    }
    report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const CatalogRow& a, const CatalogRow& b) {
                     if (a.result.infinite != b.result.infinite)
                       return a.result.infinite;  // divergent tau first
                     return a.result.tau > b.result.tau;
                   });
  return report;
}

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

std::string fmt_tau(const InstabilityResult& r) {
  return r.infinite ? "inf" : fmt(r.tau);
}

}  // namespace

std::string report_table(const CatalogReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(34) << "experiment" << std::right
      << std::setw(13) << "tau_s" << std::setw(13) << "table_tau_s"
      << std::setw(10) << "ratio" << "  verdict\n";
  for (const auto& row : report.rows) {
    out << std::left << std::setw(34) << row.name << std::right
        << std::setw(13) << fmt_tau(row.result) << std::setw(13)
        << (row.table_tau ? fmt(*row.table_tau) : "-") << std::setw(10)
        << (row.ratio ? fmt(*row.ratio) : "-") << "  "
        << (row.verdict.empty() ? "-" : row.verdict) << "\n";
  }
  return out.str();
}

std::string report_csv(const CatalogReport& report) {
  std::ostringstream out;
  out << "experiment,tau_s,table_tau_s,ratio,quad_rel_error,verdict\n";
  for (const auto& row : report.rows) {
    out << row.name << ',' << fmt_tau(row.result) << ','
        << (row.table_tau ? fmt(*row.table_tau) : "") << ','
        << (row.ratio ? fmt(*row.ratio) : "") << ','
        << fmt(row.result.quadrature_error) << ','
        << row.verdict << "\n";
  }
  return out.str();
}

}  // namespace taugrav
