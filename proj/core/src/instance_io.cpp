#include "bosc/instance_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bosc/error.hpp"

namespace bosc {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_col_at(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_checked(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col_at(text, e.byte > 0 ? e.byte - 1 : 0);
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": " << e.what();
    throw Error(ErrorCode::ParseError, os.str());
  }
}

double require_number(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    throw Error(ErrorCode::ParseError, where + ": missing numeric field '" + key + "'");
  }
  return it->get<double>();
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open " + file.string());
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::ParseError, "cannot write " + file.string());
  }
  out << text;
}

std::array<double, 2> range_from(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::ParseError, "config field '" + key + "' must be [lo, hi]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::vector<std::vector<CandidateService>> parse_instance(const std::string& text) {
  const json doc = parse_checked(text);
  if (!doc.is_object() || !doc.contains("tasks") || !doc["tasks"].is_array()) {
    throw Error(ErrorCode::ParseError, "instance must be an object with a 'tasks' array");
  }
  std::vector<std::vector<CandidateService>> classes;
  std::size_t class_idx = 0;
  for (const json& task : doc["tasks"]) {
    ++class_idx;
    if (!task.is_array()) {
      throw Error(ErrorCode::ParseError,
                  "task " + std::to_string(class_idx) + " must be an array of candidates");
    }
    std::vector<CandidateService> cls;
    std::size_t cand_idx = 0;
    for (const json& c : task) {
      ++cand_idx;
      const std::string where =
          "task " + std::to_string(class_idx) + " candidate " + std::to_string(cand_idx);
      if (!c.is_object()) throw Error(ErrorCode::ParseError, where + ": not an object");
      CandidateService s;
      auto id = c.find("id");
      if (id == c.end() || !id->is_string()) {
        throw Error(ErrorCode::ParseError, where + ": missing string field 'id'");
      }
      s.id = id->get<std::string>();
      s.class_index = static_cast<int>(class_idx);
      s.execution_time_ms = require_number(c, "execution_time_ms", where);
      s.network_latency_ms = require_number(c, "latency_ms", where);
      s.cost = require_number(c, "cost", where);
      s.energy_rate_ma = require_number(c, "energy_rate_ma", where);
      if (s.execution_time_ms < 0 || s.network_latency_ms < 0 || s.cost < 0 ||
          s.energy_rate_ma < 0) {
        throw Error(ErrorCode::ParseError, where + ": attributes must be nonnegative");
      }
      if (auto dev = c.find("device"); dev != c.end() && !dev->is_null()) {
        if (!dev->is_object()) throw Error(ErrorCode::ParseError, where + ": bad 'device'");
        DeviceState d;
        d.current_charge_mas = require_number(*dev, "current_mas", where + " device");
        d.max_charge_mas = require_number(*dev, "max_mas", where + " device");
        d.threshold_charge_mas = require_number(*dev, "threshold_mas", where + " device");
        if (d.current_charge_mas < 0 || d.current_charge_mas > d.max_charge_mas ||
            d.threshold_charge_mas >= d.max_charge_mas || d.max_charge_mas <= 0) {
          throw Error(ErrorCode::ParseError, where + ": inconsistent device charges");
        }
        s.device = d;
      }
      cls.push_back(std::move(s));
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::vector<CandidateService>> load_instance(const std::filesystem::path& file) {
  return parse_instance(read_file(file));
}

std::string instance_to_json(const std::vector<std::vector<CandidateService>>& classes) {
  json tasks = json::array();
  for (const auto& cls : classes) {
    json task = json::array();
    for (const auto& s : cls) {
      json c{{"id", s.id},
             {"execution_time_ms", s.execution_time_ms},
             {"latency_ms", s.network_latency_ms},
             {"cost", s.cost},
             {"energy_rate_ma", s.energy_rate_ma}};
      if (s.device) {
        c["device"] = json{{"current_mas", s.device->current_charge_mas},
                           {"max_mas", s.device->max_charge_mas},
                           {"threshold_mas", s.device->threshold_charge_mas}};
      }
      task.push_back(std::move(c));
    }
    tasks.push_back(std::move(task));
  }
  return json{{"tasks", std::move(tasks)}}.dump(2) + "\n";
}

void save_instance(const std::filesystem::path& file,
                   const std::vector<std::vector<CandidateService>>& classes) {
  write_file(file, instance_to_json(classes));
}

ScenarioConfig parse_config(const std::string& text) {
  const json doc = parse_checked(text);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  ScenarioConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "task_count") cfg.task_count = value.get<int>();
    else if (key == "candidates_per_task") cfg.candidates_per_task = value.get<int>();
    else if (key == "exec_time_range_ms") cfg.exec_time_range_ms = range_from(value, key);
    else if (key == "latency_range_ms") cfg.latency_range_ms = range_from(value, key);
    else if (key == "cost_range") cfg.cost_range = range_from(value, key);
    else if (key == "battery_max_mah") cfg.battery_max_mah = value.get<double>();
    else if (key == "initial_frac_range") cfg.initial_frac_range = range_from(value, key);
    else if (key == "threshold_frac") cfg.threshold_frac = value.get<double>();
    else if (key == "invocation_drain_range_mas")
      cfg.invocation_drain_range_mas = range_from(value, key);
    else if (key == "fluctuation_range") cfg.fluctuation_range = range_from(value, key);
    else if (key == "weights") {
      const auto r = range_from(value, key);
      cfg.weights = UtilityWeights{r[0], r[1]};
    } else if (key == "battery_hosted_fraction")
      cfg.battery_hosted_fraction = value.get<double>();
    else if (key == "rng_seed") cfg.rng_seed = value.get<std::uint64_t>();
    else if (key == "repetitions") cfg.repetitions = value.get<int>();
    else if (key == "round_cap") cfg.round_cap = value.get<int>();
    else if (key == "drain_noise_range") cfg.drain_noise_range = range_from(value, key);
    else if (key == "qos_distribution") {
      const std::string d = value.get<std::string>();
      if (d == "uniform") cfg.qos_distribution = Distribution::Uniform;
      else if (d == "normal") cfg.qos_distribution = Distribution::Normal;
      else throw Error(ErrorCode::ParseError, "qos_distribution must be uniform or normal");
    } else {
      throw Error(ErrorCode::ParseError, "unknown config field '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& file) {
  return parse_config(read_file(file));
}

std::string config_to_json(const ScenarioConfig& cfg) {
  json doc{
      {"task_count", cfg.task_count},
      {"candidates_per_task", cfg.candidates_per_task},
      {"exec_time_range_ms", cfg.exec_time_range_ms},
      {"latency_range_ms", cfg.latency_range_ms},
      {"cost_range", cfg.cost_range},
      {"battery_max_mah", cfg.battery_max_mah},
      {"initial_frac_range", cfg.initial_frac_range},
      {"threshold_frac", cfg.threshold_frac},
      {"invocation_drain_range_mas", cfg.invocation_drain_range_mas},
      {"fluctuation_range", cfg.fluctuation_range},
      {"weights", std::array<double, 2>{cfg.weights.time_weight, cfg.weights.cost_weight}},
      {"battery_hosted_fraction", cfg.battery_hosted_fraction},
      {"rng_seed", cfg.rng_seed},
      {"repetitions", cfg.repetitions},
      {"round_cap", cfg.round_cap},
      {"drain_noise_range", cfg.drain_noise_range},
      {"qos_distribution", cfg.qos_distribution == Distribution::Uniform ? "uniform" : "normal"},
  };
  return doc.dump(2) + "\n";
}

}  // namespace bosc
