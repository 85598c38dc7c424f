#include "bosc/scenario.hpp"

#include <string>

#include "bosc/error.hpp"

namespace bosc {

namespace {

void check_range(const std::array<double, 2>& r, const char* name) {
  if (!(r[0] <= r[1])) {
    throw Error(ErrorCode::InvalidConfig, std::string(name) + " range has lo > hi");
  }
}

double draw(Rng& rng, const std::array<double, 2>& r, Distribution d) {
  return d == Distribution::Uniform ? rng.uniform(r[0], r[1]) : rng.normal_in(r[0], r[1]);
}

}  // namespace

void ScenarioConfig::validate() const {
  if (task_count < 1) throw Error(ErrorCode::InvalidConfig, "task_count must be >= 1");
  if (candidates_per_task < 1) {
    throw Error(ErrorCode::InvalidConfig, "candidates_per_task must be >= 1");
  }
  check_range(exec_time_range_ms, "exec_time");
  check_range(latency_range_ms, "latency");
  check_range(cost_range, "cost");
  check_range(initial_frac_range, "initial_frac");
  check_range(invocation_drain_range_mas, "invocation_drain");
  check_range(fluctuation_range, "fluctuation");
  check_range(drain_noise_range, "drain_noise");
  if (exec_time_range_ms[0] < 0.0 || latency_range_ms[0] < 0.0 || cost_range[0] < 0.0 ||
      invocation_drain_range_mas[0] < 0.0 || fluctuation_range[0] < 0.0 ||
      drain_noise_range[0] < 0.0) {
    throw Error(ErrorCode::InvalidConfig, "ranges must be nonnegative");
  }
  if (battery_max_mah <= 0.0) throw Error(ErrorCode::InvalidConfig, "battery_max_mah must be > 0");
  if (initial_frac_range[0] < 0.0 || initial_frac_range[1] > 1.0) {
    throw Error(ErrorCode::InvalidConfig, "initial_frac_range must lie in [0,1]");
  }
  if (threshold_frac < 0.0 || threshold_frac >= 1.0) {
    throw Error(ErrorCode::InvalidConfig, "threshold_frac must lie in [0,1)");
  }
  if (battery_hosted_fraction < 0.0 || battery_hosted_fraction > 1.0) {
    throw Error(ErrorCode::InvalidConfig, "battery_hosted_fraction must lie in [0,1]");
  }
  if (repetitions < 0) throw Error(ErrorCode::InvalidConfig, "repetitions must be >= 0");
  if (round_cap < 1) throw Error(ErrorCode::InvalidConfig, "round_cap must be >= 1");
  weights.validate();
}

Scenario generate_scenario(const ScenarioConfig& config) {
  return generate_scenario(config, config.rng_seed);
}

Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed) {
  config.validate();
  Rng rng(seed);
  const double cmax = config.battery_max_mas();
  const double threshold = config.threshold_frac * cmax;

  Scenario scenario;
  scenario.classes.resize(static_cast<std::size_t>(config.task_count));
  scenario.invocation_drain_mas.resize(scenario.classes.size());
  for (int i = 0; i < config.task_count; ++i) {
    auto& cls = scenario.classes[static_cast<std::size_t>(i)];
    auto& drains = scenario.invocation_drain_mas[static_cast<std::size_t>(i)];
    cls.reserve(static_cast<std::size_t>(config.candidates_per_task));
    drains.reserve(static_cast<std::size_t>(config.candidates_per_task));
    for (int j = 0; j < config.candidates_per_task; ++j) {
      CandidateService s;
      s.id = "s" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      s.execution_time_ms = draw(rng, config.exec_time_range_ms, config.qos_distribution);
      s.network_latency_ms = draw(rng, config.latency_range_ms, config.qos_distribution);
      s.cost = draw(rng, config.cost_range, config.qos_distribution);
      // Same number of draws per candidate regardless of hosting, so the
      // stream layout does not depend on the fraction.
      const double hosted_u = rng.unit();
      const double drain = rng.uniform(config.invocation_drain_range_mas[0],
                                       config.invocation_drain_range_mas[1]);
      const double init_frac =
          rng.uniform(config.initial_frac_range[0], config.initial_frac_range[1]);
      const bool hosted = hosted_u < config.battery_hosted_fraction ||
                          config.battery_hosted_fraction >= 1.0;
      if (hosted) {
        const double t_s = (s.execution_time_ms + s.network_latency_ms) / 1000.0;
        s.energy_rate_ma = t_s > 0.0 ? drain / t_s : 0.0;
        s.device = DeviceState{init_frac * cmax, cmax, threshold};
        drains.push_back(drain);
      } else {
        drains.push_back(0.0);
      }
      cls.push_back(std::move(s));
    }
  }
  return scenario;
}

void fluctuate_qos(Scenario& scenario, Rng& rng, const ScenarioConfig& config) {
  const auto& r = config.fluctuation_range;
  for (auto& cls : scenario.classes) {
    for (auto& s : cls) {
      s.execution_time_ms *= rng.uniform(r[0], r[1]);
      s.network_latency_ms *= rng.uniform(r[0], r[1]);
      s.cost *= rng.uniform(r[0], r[1]);
    }
  }
}

double apply_invocation(Scenario& scenario, const CompositionPath& path, Rng& rng,
                        const ScenarioConfig& config) {
  double total = 0.0;
  for (std::size_t c = 0; c < path.selection_indices.size(); ++c) {
    const std::size_t j = path.selection_indices[c];
    CandidateService& s = scenario.classes[c][j];
    if (!s.device) continue;
    const double noise = rng.uniform(config.drain_noise_range[0], config.drain_noise_range[1]);
    const double drain = scenario.invocation_drain_mas[c][j] * noise;
    const double before = s.device->current_charge_mas;
    s.device->current_charge_mas = std::max(0.0, before - drain);
    total += before - s.device->current_charge_mas;
  }
  return total;
}

}  // namespace bosc
