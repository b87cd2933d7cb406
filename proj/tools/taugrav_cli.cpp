// taugrav: instability timescales of superposed gravitational time dilations.
//
// Subcommands: constants, lightclock, instability, interferometer, catalog,
// verify. Output is a table by default; --output csv/json for machine use.
// Numbers are printed with 6 significant digits (json keeps full precision).
// Fixed --seed makes every run, including Monte Carlo, byte-identical.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "taugrav/catalog.hpp"
#include "taugrav/config_io.hpp"
#include "taugrav/constants.hpp"
#include "taugrav/instability.hpp"
#include "taugrav/interferometer.hpp"
#include "taugrav/lightclock.hpp"
#include "taugrav/verify.hpp"

#ifndef TAUGRAV_CATALOG_DIR
#define TAUGRAV_CATALOG_DIR "data/catalog"
#endif

namespace {

using nlohmann::json;
using namespace taugrav;

std::string fmt6(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

struct SweepRange {
  std::string name;
  double lo = 0.0, hi = 0.0;
  int steps = 0;
};

// --sweep NAME LO..HI steps K
SweepRange parse_sweep(const std::vector<std::string>& tokens) {
  if (tokens.size() != 4 || tokens[2] != "steps")
    throw CLI::ValidationError("--sweep expects: NAME LO..HI steps K");
  SweepRange r;
  r.name = tokens[0];
  const auto dots = tokens[1].find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("sweep range must be LO..HI");
  try {
    r.lo = std::stod(tokens[1].substr(0, dots));
    r.hi = std::stod(tokens[1].substr(dots + 2));
    r.steps = std::stoi(tokens[3]);
  } catch (const std::exception&) {
    throw CLI::ValidationError("sweep range/steps must be numeric");
  }
  if (!(r.hi > r.lo))
    throw CLI::ValidationError("sweep range is empty (need LO < HI)");
  if (r.steps < 2)
    throw CLI::ValidationError("sweep needs at least 2 steps");
  return r;
}

int cmd_constants(const std::string& output) {
  const PhysicalConstants k = codata2018();
  if (output == "json") {
    json j{{"G", k.G},       {"c", k.c},   {"hbar", k.hbar},
           {"eps0", k.eps0}, {"m_e", k.m_e}, {"q_e", k.q_e}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  struct Row { const char* name; double value; const char* unit; };
  const Row rows[] = {
      {"G", k.G, "m^3/(kg s^2)"}, {"c", k.c, "m/s"},
      {"hbar", k.hbar, "J s"},    {"eps0", k.eps0, "F/m"},
      {"m_e", k.m_e, "kg"},       {"q_e", k.q_e, "C"}};
  if (output == "csv") {
    std::cout << "constant,value,unit\n";
    for (const auto& r : rows)
      std::cout << r.name << ',' << fmt6(r.value) << ',' << r.unit << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << std::left << std::setw(6) << r.name << std::right
                << std::setw(14) << fmt6(r.value) << "  " << r.unit << "\n";
  }
  return 0;
}

int cmd_lightclock(const LightClockSpec& spec, int orders, bool emit_train,
                   double train_t0, double train_t1,
                   const std::string& output) {
  spec.validate();
  const PhysicalConstants k = codata2018();
  const double dt_a = traversal_time(spec, spec.radius_a, k);
  const double dt_b = traversal_time(spec, spec.radius_b, k);
  const double delay = superposition_delay(spec, k);
  const double dtbar = 0.5 * (dt_a + dt_b);
  std::optional<double> horizon;
  if (spec.pulse.bandwidth > 0.0)
    horizon = coherence_horizon(spec.pulse.bandwidth, dt_a - dt_b, dtbar);

  if (emit_train) {
    auto train = pulse_train_superposed_exact(spec, orders, k);
    auto samples = synthesize(train, spec.pulse, train_t0, train_t1);
    std::cout << "time_s,re,im,modulus\n";
    for (const auto& s : samples)
      std::cout << fmt6(s.time) << ',' << fmt6(s.amplitude.real()) << ','
                << fmt6(s.amplitude.imag()) << ','
                << fmt6(std::abs(s.amplitude)) << "\n";
    return 0;
  }
  if (output == "json") {
    json j{{"traversal_a_s", dt_a},
           {"traversal_b_s", dt_b},
           {"mean_traversal_s", dtbar},
           {"superposition_delay_s", delay}};
    if (horizon) j["coherence_horizon_s"] = *horizon;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const char sep = output == "csv" ? ',' : '\t';
  if (output == "csv") std::cout << "quantity,value_s\n";
  std::cout << "traversal_a" << sep << fmt6(dt_a) << "\n"
            << "traversal_b" << sep << fmt6(dt_b) << "\n"
            << "mean_traversal" << sep << fmt6(dtbar) << "\n"
            << "superposition_delay" << sep << fmt6(delay) << "\n";
  if (horizon)
    std::cout << "coherence_horizon" << sep << fmt6(*horizon) << "\n";
  return 0;
}

json result_to_json(const InstabilityResult& r) {
  json j{{"formula", formula_name(r.formula)},
         {"infinite", r.infinite},
         {"denominator_rad_per_s", r.denominator},
         {"quad_rel_error", r.quadrature_error}};
  if (!r.infinite) j["tau_s"] = r.tau;
  return j;
}

int cmd_instability(const std::string& config_path, std::uint64_t seed,
                    const std::string& output) {
  ExperimentEntry entry = load_entry(config_path);
  QuadratureBudget budget;
  budget.seed = seed;
  const InstabilityResult r = compute_entry(entry, codata2018(), budget);
  if (output == "json") {
    json j = result_to_json(r);
    j["name"] = entry.name;
    std::cout << j.dump(2) << "\n";
  } else if (output == "csv") {
    std::cout << "formula,tau_s,denominator_rad_per_s,quad_rel_error\n"
              << result_csv_row(r) << "\n";
  } else {
    std::cout << "experiment: " << entry.name << "\n"
              << "formula:    " << formula_name(r.formula) << "\n"
              << "tau:        " << (r.infinite ? "inf" : fmt6(r.tau))
              << " s\n"
              << "quad error: " << fmt6(r.quadrature_error) << "\n";
  }
  return 0;
}

int cmd_interferometer(std::optional<double> gain_db,
                       std::optional<double> critical_tau,
                       const std::vector<std::string>& sweep_tokens,
                       double photon_bandwidth, double amplifier_bandwidth,
                       const std::string& output) {
  const PhysicalConstants k = codata2018();
  const CoaxSpec coax;
  if (!sweep_tokens.empty()) {
    const SweepRange sweep = parse_sweep(sweep_tokens);
    if (sweep.name != "gain_db")
      throw CLI::ValidationError("unknown sweep parameter '" + sweep.name +
                                 "' (supported: gain_db)");
    std::cout << "gain_dB,visibility,tau_s\n";
    for (int i = 0; i < sweep.steps; ++i) {
      const double db =
          sweep.lo + i * (sweep.hi - sweep.lo) / (sweep.steps - 1);
      const double gain = std::pow(10.0, db / 10.0);
      std::cout << fmt6(db) << ','
                << fmt6(visibility(photon_bandwidth, amplifier_bandwidth,
                                   gain))
                << ',' << fmt6(tau_vs_gain(gain, coax, k)) << "\n";
    }
    return 0;
  }
  if (critical_tau) {
    const double db = critical_gain_db(*critical_tau, coax, k);
    if (output == "json")
      std::cout << json{{"target_tau_s", *critical_tau},
                        {"critical_gain_db", db}}
                       .dump(2)
                << "\n";
    else
      std::cout << "critical gain: " << fmt6(db) << " dB for tau = "
                << fmt6(*critical_tau) << " s\n";
    return 0;
  }
  const double db = gain_db.value_or(0.0);
  const double gain = std::pow(10.0, db / 10.0);
  const double vis = visibility(photon_bandwidth, amplifier_bandwidth, gain);
  const double tau = tau_vs_gain(gain, coax, k);
  if (output == "json") {
    std::cout << json{{"gain_db", db}, {"visibility", vis}, {"tau_s", tau}}
                     .dump(2)
              << "\n";
  } else if (output == "csv") {
    std::cout << "gain_dB,visibility,tau_s\n"
              << fmt6(db) << ',' << fmt6(vis) << ',' << fmt6(tau) << "\n";
  } else {
    std::cout << "gain:       " << fmt6(db) << " dB\n"
              << "visibility: " << fmt6(vis) << "\n"
              << "tau:        " << fmt6(tau) << " s\n";
  }
  return 0;
}

int cmd_catalog(const std::string& dir, std::uint64_t seed,
                const std::string& output) {
  QuadratureBudget budget;
  budget.seed = seed;
  const auto entries = load_catalog_dir(dir);
  const auto report = rank_catalog(entries, codata2018(), budget);
  if (output == "json") {
    json rows = json::array();
    for (const auto& row : report.rows) {
      json j = result_to_json(row.result);
      j["name"] = row.name;
      if (row.table_tau) j["table_tau_s"] = *row.table_tau;
      if (row.ratio) j["ratio"] = *row.ratio;
      if (!row.verdict.empty()) j["verdict"] = row.verdict;
      rows.push_back(std::move(j));
    }
    std::cout << rows.dump(2) << "\n";
  } else if (output == "csv") {
    std::cout << report_csv(report);
  } else {
    std::cout << report_table(report);
  }
  return 0;
}

int cmd_verify(std::uint64_t seed, std::size_t mc_samples) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.mc_samples = mc_samples;
  const auto checks = run_verification(opts);
  std::cout << verification_report(checks);
  return all_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "instability timescales of quantum superpositions of gravitational "
      "time dilation"};
  app.require_subcommand(1);

  std::string output = "table";
  std::uint64_t seed = 20260823;
  app.add_option("--output", output, "report format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "RNG seed for Monte Carlo paths")
      ->capture_default_str();

  auto* constants = app.add_subcommand("constants", "physical constants used");

  auto* lightclock =
      app.add_subcommand("lightclock", "light clock over a superposed ball");
  LightClockSpec lc;
  lc.mirror_spacing = 1.0;
  lc.ball_mass = 1e-12;
  lc.radius_a = 0.095;
  lc.radius_b = 0.1;
  lc.pulse.bandwidth = 1e12;
  int lc_orders = 50;
  bool lc_train = false;
  double lc_t0 = 0.0, lc_t1 = 0.0;
  lightclock->add_option("--mass", lc.ball_mass, "ball mass, kg")
      ->capture_default_str();
  lightclock->add_option("--spacing", lc.mirror_spacing, "mirror spacing, m")
      ->capture_default_str();
  lightclock->add_option("--radius-a", lc.radius_a, "branch-1 radius, m")
      ->capture_default_str();
  lightclock->add_option("--radius-b", lc.radius_b, "branch-2 radius, m")
      ->capture_default_str();
  lightclock
      ->add_option("--transmissivity", lc.transmissivity,
                   "half-silvered mirror |T|")
      ->capture_default_str();
  lightclock
      ->add_option("--bandwidth", lc.pulse.bandwidth,
                   "input pulse bandwidth, rad/s")
      ->capture_default_str();
  lightclock->add_option("--orders", lc_orders, "round trips kept")
      ->capture_default_str();
  lightclock->add_flag("--train", lc_train,
                       "emit the synthesized output train as CSV");
  lightclock->add_option("--t0", lc_t0, "train start time, s");
  lightclock->add_option("--t1", lc_t1, "train end time, s");

  auto* instability =
      app.add_subcommand("instability", "probe instability from a config file");
  std::string config_path;
  instability->add_option("--config", config_path, "experiment JSON file")
      ->required();

  auto* interferometer = app.add_subcommand(
      "interferometer", "amplified microwave Mach-Zehnder figures");
  std::optional<double> if_gain_db, if_critical_tau;
  std::vector<std::string> if_sweep;
  double if_bph = 2.0 * 3.14159265358979323846 * 1e7;
  double if_ba = 2.0 * 3.14159265358979323846 * 300.0;
  interferometer->add_option("--gain-db", if_gain_db, "amplifier gain, dB");
  interferometer->add_option("--critical-tau", if_critical_tau,
                             "report the gain reaching this timescale, s");
  interferometer
      ->add_option("--sweep", if_sweep, "NAME LO..HI steps K (gain_db)")
      ->expected(4);
  interferometer
      ->add_option("--photon-bandwidth", if_bph, "photon bandwidth, rad/s")
      ->capture_default_str();
  interferometer
      ->add_option("--amplifier-bandwidth", if_ba,
                   "amplifier bandwidth, rad/s")
      ->capture_default_str();

  auto* catalog =
      app.add_subcommand("catalog", "rank the shipped experiment catalog");
  std::string catalog_dir = TAUGRAV_CATALOG_DIR;
  catalog->add_option("--dir", catalog_dir, "directory of entry JSON files")
      ->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify", "cross-check closed forms against independent oracles");
  std::size_t mc_samples = 2000000;
  verify->add_option("--mc-samples", mc_samples, "Monte Carlo sample budget")
      ->capture_default_str();

  // --output/--seed are accepted before or after the subcommand
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (constants->parsed()) return cmd_constants(output);
    if (lightclock->parsed())
      return cmd_lightclock(lc, lc_orders, lc_train, lc_t0, lc_t1, output);
    if (instability->parsed())
      return cmd_instability(config_path, seed, output);
    if (interferometer->parsed())
      return cmd_interferometer(if_gain_db, if_critical_tau, if_sweep, if_bph,
                                if_ba, output);
    if (catalog->parsed()) return cmd_catalog(catalog_dir, seed, output);
    if (verify->parsed()) return cmd_verify(seed, mc_samples);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
