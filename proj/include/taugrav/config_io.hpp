#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "taugrav/bodies.hpp"
#include "taugrav/catalog.hpp"

// JSON schema for bodies, superpositions, probes and catalog entries.
// The exact field layout is documented in docs/config-schema.md.

namespace taugrav {

nlohmann::json to_json(const Body& b);
nlohmann::json to_json(const MassConfiguration& c);
nlohmann::json to_json(const SuperpositionState& s);
nlohmann::json to_json(const ProbeDensity& p);
nlohmann::json to_json(const ExperimentEntry& e);

Body body_from_json(const nlohmann::json& j);
MassConfiguration mass_configuration_from_json(const nlohmann::json& j);
SuperpositionState superposition_from_json(const nlohmann::json& j);
ProbeDensity probe_from_json(const nlohmann::json& j);
ExperimentEntry entry_from_json(const nlohmann::json& j);

ExperimentEntry load_entry(const std::string& path);
std::vector<ExperimentEntry> load_catalog_dir(const std::string& dir);
void save_entry(const ExperimentEntry& e, const std::string& path);

}  // namespace taugrav
