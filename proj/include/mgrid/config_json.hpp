#pragma once

#include "mgrid/config.hpp"

#include <json.hpp>

namespace mgrid {

// Overlays JSON keys onto cfg; unknown keys throw ConfigError naming the key
// and `context` (file name / JSON pointer).
SystemConfig apply_config_json(SystemConfig cfg, const nlohmann::json& j,
                               const std::string& context);

} // namespace mgrid
