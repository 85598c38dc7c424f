#ifndef BOSC_INSTANCE_IO_HPP
#define BOSC_INSTANCE_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "bosc/scenario.hpp"
#include "bosc/service.hpp"

namespace bosc {

// Instance files: {"tasks": [[candidate, ...], ...]} with candidate keys
// id, execution_time_ms, latency_ms, cost, energy_rate_ma and an optional
// device {current_mas, max_mas, threshold_mas}. Parse failures throw
// PARSE_ERROR with a line-numbered diagnostic.
std::vector<std::vector<CandidateService>> parse_instance(const std::string& text);
std::vector<std::vector<CandidateService>> load_instance(const std::filesystem::path& file);

std::string instance_to_json(const std::vector<std::vector<CandidateService>>& classes);
void save_instance(const std::filesystem::path& file,
                   const std::vector<std::vector<CandidateService>>& classes);

// Scenario configs use the field names of ScenarioConfig; absent keys keep
// their defaults, unknown keys are rejected.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::filesystem::path& file);
std::string config_to_json(const ScenarioConfig& config);

}  // namespace bosc

#endif  // BOSC_INSTANCE_IO_HPP
