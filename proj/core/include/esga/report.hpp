#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "esga/ga_engine.hpp"

namespace esga {

nlohmann::json config_to_json(const GAConfig& cfg);

/// Tours are serialized as 0-based city orders. The survivor-score hook is
/// not serializable and only noted as custom or default.
nlohmann::json report_to_json(const RunReport& report);

/// Header `generation,best,mean,stage`, one row per generation.
std::string trace_to_csv(const RunReport& report);

} // namespace esga
