#pragma once

#include <string>

#include <json.hpp>

#include "centropy/analysis.hpp"
#include "centropy/types.hpp"

namespace centropy {

// JSON emission. Numbers are emitted at full precision; keys are stable.
nlohmann::json to_json(const ComponentSpec& component);
nlohmann::json to_json(const MachineEntropy& entropy);
nlohmann::json to_json(const ClusterEntropy& entropy, const PenaltyParams& params);
nlohmann::json to_json(const CorrelationReport& report);
nlohmann::json to_json(const ConsistencyReport& report);
nlohmann::json to_json(const EfficiencyRanking& ranking);
nlohmann::json to_json(const SensitivityReport& report);

// Plain-text tables. Numbers are printed with four decimal places.
std::string render_text(const MachineEntropy& entropy);
std::string render_text(const ClusterEntropy& entropy, const PenaltyParams& params);
std::string render_text(const CorrelationReport& report);
std::string render_text(const ConsistencyReport& report);
std::string render_text(const EfficiencyRanking& ranking);
std::string render_text(const SensitivityReport& report);

}  // namespace centropy
