#ifndef BOSC_SCENARIO_HPP
#define BOSC_SCENARIO_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "bosc/graph.hpp"
#include "bosc/objective.hpp"
#include "bosc/rng.hpp"
#include "bosc/service.hpp"

namespace bosc {

enum class Distribution { Uniform, Normal };

// Synthetic experiment parameters. Defaults reproduce the reference setup:
// uniform QoS draws, 1500 mAh batteries starting in [0.7, 1.0] of capacity
// with a 30% cutoff, per-invocation drains in [100, 10000] mA*s, +-10%
// multiplicative QoS fluctuation between rounds, equal utility weights.
struct ScenarioConfig {
  int task_count = 10;
  int candidates_per_task = 100;
  std::array<double, 2> exec_time_range_ms{20.0, 1200.0};
  std::array<double, 2> latency_range_ms{20.0, 800.0};
  std::array<double, 2> cost_range{10.0, 20.0};
  double battery_max_mah = 1500.0;
  std::array<double, 2> initial_frac_range{0.7, 1.0};
  double threshold_frac = 0.30;
  std::array<double, 2> invocation_drain_range_mas{100.0, 10000.0};
  std::array<double, 2> fluctuation_range{0.9, 1.1};
  UtilityWeights weights{};
  double battery_hosted_fraction = 1.0;
  std::uint64_t rng_seed = 1;
  int repetitions = 100;
  int round_cap = 10000;
  std::array<double, 2> drain_noise_range{1.0, 1.0};
  Distribution qos_distribution = Distribution::Uniform;

  double battery_max_mas() const { return battery_max_mah * 3600.0; }
  void validate() const;  // throws INVALID_CONFIG
};

// Mutable candidate pool a simulation run owns. Graphs are rebuilt from the
// pool each round, so availability pruning and battery depletion stay outside
// the immutable CompositionGraph. Each battery-hosted candidate drains a
// fixed amount per invocation (the draw that also defines its energy rate).
struct Scenario {
  std::vector<std::vector<CandidateService>> classes;
  std::vector<std::vector<double>> invocation_drain_mas;
};

// Deterministic given the seed. Battery-hosted candidates get an independent
// device and an energy rate derived so the estimated consumption at draw time
// equals the drawn invocation drain.
Scenario generate_scenario(const ScenarioConfig& config);
Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed);

// Multiplies every candidate's execution time, latency, and cost by fresh
// independent draws from the fluctuation range. Applied between rounds.
void fluctuate_qos(Scenario& scenario, Rng& rng, const ScenarioConfig& config);

// Drains the devices of the selected path's battery-hosted services (floored
// at zero charge) and returns the total amount drained.
double apply_invocation(Scenario& scenario, const CompositionPath& path, Rng& rng,
                        const ScenarioConfig& config);

inline CompositionGraph build_graph(const Scenario& scenario) {
  return build_graph(scenario.classes);
}

}  // namespace bosc

#endif  // BOSC_SCENARIO_HPP
