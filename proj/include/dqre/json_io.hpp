#pragma once

#include "dqre/catalog.hpp"

#include <json.hpp>

namespace dqre::json_io {

using nlohmann::json;

json to_json(const EstimateResult& r);
json to_json(const SearchResult& s);
json to_json(const MultiLevelFactory& f);
json to_json(const MsdfFactory& f);
json catalog_to_json(const FactoryCatalog& cat);
json catalog_to_json(const std::vector<MsdfFactory>& cat);

// Config-file ingestion. Recognized top-level keys: "application" and
// "hardware" objects; unknown keys anywhere are rejected with ConfigError.
ApplicationProfile application_from_json(const json& j);
HardwareModel hardware_from_json(const json& j, const HardwareModel& base = {});

struct FileConfig {
    std::optional<ApplicationProfile> application;
    std::optional<HardwareModel> hardware;
};
FileConfig load_config_file(const std::string& path, const HardwareModel& base = {});

// Canonical floating-point formatting shared by the JSON and CSV writers,
// so the two encodings of one run are field-for-field equal.
std::string format_number(double v);

} // namespace dqre::json_io
