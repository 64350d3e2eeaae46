#pragma once

#include <string>

#include "scalabfs/simulator.hpp"

#include <json.hpp>

namespace scalabfs {

nlohmann::json policy_to_json(const ModePolicy& p);
ModePolicy policy_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const SimConfig& cfg);
SimConfig config_from_json(const nlohmann::json& j);
SimConfig load_config(const std::string& path);

nlohmann::json report_to_json(const SimReport& r, bool include_levels = false);

/// One row per iteration plus a summary row.
std::string report_to_csv(const SimReport& r);

}  // namespace scalabfs
