#ifndef BOSC_SIMULATION_HPP
#define BOSC_SIMULATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bosc/pulse.hpp"
#include "bosc/scenario.hpp"

namespace bosc {

enum class Strategy { Bosc, Qosc, Epc };

const char* to_string(Strategy s);
std::optional<Strategy> strategy_from_string(const std::string& name);

struct RoundRecord {
  int round = 0;
  double selection_time_us = 0.0;
  double energy_consumed_mas = 0.0;  // realized depletion
  double qos_utility = 0.0;          // of the deployed path
  double energy_profile = 0.0;       // estimated, of the deployed path
  double optimality_ratio = 0.0;
  SolveStats pruning;                // all zero for the mono baselines
};

// Outcome of one simulation run: repeated composition rounds with battery
// depletion and QoS fluctuation until a previously selected service's device
// falls below its threshold, or the round cap is hit.
struct SimulationReport {
  Strategy strategy = Strategy::Bosc;
  std::uint64_t seed = 0;
  int composition_lifetime = 0;
  bool cap_reached = false;
  double mean_selection_time_us = 0.0;
  double mean_energy_mas = 0.0;
  double mean_optimality = 0.0;
  std::vector<RoundRecord> rounds;
};

// One composition on a fresh scenario: solve, deploy, invoke once.
RoundRecord run_single_round(const ScenarioConfig& config, Strategy strategy,
                             std::uint64_t seed);

SimulationReport run_lifetime_experiment(const ScenarioConfig& config, Strategy strategy);
SimulationReport run_lifetime_experiment(const ScenarioConfig& config, Strategy strategy,
                                         std::uint64_t seed, bool keep_rounds = true);

enum class ExperimentKind { SingleRound, Lifetime };

struct Aggregate {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
};

struct CellKey {
  int tasks = 0;
  int candidates = 0;
  Strategy strategy = Strategy::Bosc;
};

struct CellReport {
  CellKey key;
  ExperimentKind kind = ExperimentKind::SingleRound;
  int n_seeds = 0;
  Aggregate selection_time_us;
  Aggregate energy_mas;
  Aggregate optimality;
  Aggregate lifetime_rounds;  // lifetime cells only
  double mean_pulses = 0.0;
  std::string error;  // nonempty if the whole cell failed
  std::vector<SimulationReport> traces;  // kept only when tracing
};

struct SuiteRequest {
  ScenarioConfig base;
  std::vector<std::pair<int, int>> cells;  // (tasks, candidates)
  std::vector<Strategy> strategies{Strategy::Bosc, Strategy::Qosc, Strategy::Epc};
  ExperimentKind kind = ExperimentKind::SingleRound;
  bool trace = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Cross product of cells and strategies, `base.repetitions` runs per cell with
// independently derived seeds: run r of cell (n, m, strategy) uses
// mix_seed(base.rng_seed, n, m, strategy_index, r). Cells run in parallel and
// merge by request order; per-cell failures land in CellReport::error.
std::vector<CellReport> run_experiment_suite(const SuiteRequest& request);

// Deployed-path choice per strategy on an already built graph.
CompositionPath select_path(const CompositionGraph& g, Strategy strategy,
                            const SolveOptions& options, SolveStats* stats = nullptr);

// Experiment grids matching the reference figures: fig3 selection time,
// fig4 energy and fig7 optimality over the candidate grid, fig5 energy over
// the task grid, fig6 lifetime.
struct FigurePreset {
  std::string name;
  ExperimentKind kind = ExperimentKind::SingleRound;
  std::vector<std::pair<int, int>> cells;
  std::string metric;  // column emitted in the figure CSV
};
const std::vector<FigurePreset>& figure_presets();

}  // namespace bosc

#endif  // BOSC_SIMULATION_HPP
