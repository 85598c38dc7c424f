#include "bosc/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "bosc/baselines.hpp"
#include "bosc/error.hpp"

namespace bosc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_us(Clock::time_point t0) {
  return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

// Benefit-style optimality: fraction of the attainable utility headroom the
// strategy keeps, 1.0 when it matches the QoS-optimal path.
double optimality_ratio(double qos_strategy, double qos_optimal) {
  const double denom = 1.0 - qos_optimal;
  const double numer = 1.0 - qos_strategy;
  if (denom <= 0.0) return numer <= 0.0 ? 1.0 : 0.0;
  return std::clamp(numer / denom, 0.0, 1.0);
}

int strategy_index(Strategy s) { return static_cast<int>(s); }

struct RoundOutcome {
  CompositionPath path;
  RoundRecord record;
};

RoundOutcome run_round(const CompositionGraph& graph, Strategy strategy,
                       const SolveOptions& options) {
  RoundOutcome out;
  const auto t0 = Clock::now();
  out.path = select_path(graph, strategy, options, &out.record.pruning);
  out.record.selection_time_us = elapsed_us(t0);
  out.record.qos_utility = out.path.objectives.qos;
  out.record.energy_profile = out.path.objectives.ep;
  const double qos_opt = strategy == Strategy::Qosc
                             ? out.path.objectives.qos
                             : solve_mono(graph, options.weights, BaselineKind::QosOnly)
                                   .objectives.qos;
  out.record.optimality_ratio = optimality_ratio(out.path.objectives.qos, qos_opt);
  return out;
}

struct Accumulator {
  double sum = 0.0, sumsq = 0.0;
  int n = 0;
  void add(double v) {
    sum += v;
    sumsq += v * v;
    ++n;
  }
  Aggregate aggregate() const {
    Aggregate a;
    if (n == 0) return a;
    a.mean = sum / n;
    if (n > 1) {
      const double var = std::max(0.0, (sumsq - sum * sum / n) / (n - 1));
      a.stddev = std::sqrt(var);
    }
    return a;
  }
};

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Bosc: return "bosc";
    case Strategy::Qosc: return "qosc";
    case Strategy::Epc: return "epc";
  }
  return "?";
}

std::optional<Strategy> strategy_from_string(const std::string& name) {
  if (name == "bosc") return Strategy::Bosc;
  if (name == "qosc") return Strategy::Qosc;
  if (name == "epc") return Strategy::Epc;
  return std::nullopt;
}

CompositionPath select_path(const CompositionGraph& g, Strategy strategy,
                            const SolveOptions& options, SolveStats* stats) {
  switch (strategy) {
    case Strategy::Qosc:
      return solve_mono(g, options.weights, BaselineKind::QosOnly);
    case Strategy::Epc:
      return solve_mono(g, options.weights, BaselineKind::EnergyOnly);
    case Strategy::Bosc:
      break;
  }
  SolveResult result = solve(g, options);
  if (stats) *stats = result.stats;
  return pick_balanced(result.frontier);
}

RoundRecord run_single_round(const ScenarioConfig& config, Strategy strategy,
                             std::uint64_t seed) {
  config.validate();
  Scenario scenario = generate_scenario(config, seed);
  Rng rng(mix_seed(seed, 0xd0d0));
  const CompositionGraph graph = build_graph(scenario);
  SolveOptions options;
  options.weights = config.weights;
  RoundOutcome out = run_round(graph, strategy, options);
  out.record.round = 1;
  out.record.energy_consumed_mas = apply_invocation(scenario, out.path, rng, config);
  return out.record;
}

SimulationReport run_lifetime_experiment(const ScenarioConfig& config, Strategy strategy) {
  return run_lifetime_experiment(config, strategy, config.rng_seed);
}

SimulationReport run_lifetime_experiment(const ScenarioConfig& config, Strategy strategy,
                                         std::uint64_t seed, bool keep_rounds) {
  config.validate();
  SimulationReport report;
  report.strategy = strategy;
  report.seed = seed;

  Scenario scenario = generate_scenario(config, seed);
  Rng rng(mix_seed(seed, 0xd0d0));
  SolveOptions options;
  options.weights = config.weights;

  double time_sum = 0.0, energy_sum = 0.0, optimality_sum = 0.0;
  for (int round = 1; round <= config.round_cap; ++round) {
    CompositionGraph graph;
    try {
      graph = build_graph(scenario);
    } catch (const Error&) {
      if (round == 1) throw;
      // A whole class went dark without the failure rule firing first; the
      // composition cannot continue.
      report.composition_lifetime = round - 1;
      break;
    }
    RoundOutcome out = run_round(graph, strategy, options);
    out.record.round = round;
    out.record.energy_consumed_mas = apply_invocation(scenario, out.path, rng, config);

    time_sum += out.record.selection_time_us;
    energy_sum += out.record.energy_consumed_mas;
    optimality_sum += out.record.optimality_ratio;
    if (keep_rounds) report.rounds.push_back(out.record);

    // Only invoked devices lose charge, so checking the selected services
    // covers every possible first failure.
    bool failed = false;
    for (std::size_t c = 0; c < out.path.selection_indices.size(); ++c) {
      const CandidateService& s = scenario.classes[c][out.path.selection_indices[c]];
      if (s.device && residual_energy(*s.device) <= 0.0) {
        failed = true;
        break;
      }
    }
    report.composition_lifetime = round;
    if (failed) break;
    if (round == config.round_cap) {
      report.cap_reached = true;
      break;
    }
    fluctuate_qos(scenario, rng, config);
  }

  const int rounds = std::max(1, report.composition_lifetime);
  report.mean_selection_time_us = time_sum / rounds;
  report.mean_energy_mas = energy_sum / rounds;
  report.mean_optimality = optimality_sum / rounds;
  return report;
}

std::vector<CellReport> run_experiment_suite(const SuiteRequest& request) {
  request.base.validate();
  if (request.cells.empty() || request.strategies.empty()) {
    throw Error(ErrorCode::InvalidConfig, "suite needs at least one cell and one strategy");
  }

  struct Job {
    CellKey key;
  };
  std::vector<Job> jobs;
  for (const auto& [tasks, candidates] : request.cells) {
    for (Strategy s : request.strategies) {
      jobs.push_back({CellKey{tasks, candidates, s}});
    }
  }
  std::vector<CellReport> reports(jobs.size());

  auto run_cell = [&](std::size_t idx) {
    const CellKey key = jobs[idx].key;
    CellReport& cell = reports[idx];
    cell.key = key;
    cell.kind = request.kind;
    ScenarioConfig config = request.base;
    config.task_count = key.tasks;
    config.candidates_per_task = key.candidates;
    try {
      config.validate();
      Accumulator time_acc, energy_acc, opt_acc, life_acc;
      double pulse_sum = 0.0;
      for (int rep = 0; rep < config.repetitions; ++rep) {
        const std::uint64_t seed =
            mix_seed(request.base.rng_seed, static_cast<std::uint64_t>(key.tasks),
                     static_cast<std::uint64_t>(key.candidates),
                     static_cast<std::uint64_t>(strategy_index(key.strategy)),
                     static_cast<std::uint64_t>(rep));
        if (request.kind == ExperimentKind::SingleRound) {
          RoundRecord r = run_single_round(config, key.strategy, seed);
          time_acc.add(r.selection_time_us);
          energy_acc.add(r.energy_consumed_mas);
          opt_acc.add(r.optimality_ratio);
          pulse_sum += static_cast<double>(r.pruning.pulses);
          if (request.trace) {
            SimulationReport t;
            t.strategy = key.strategy;
            t.seed = seed;
            t.composition_lifetime = 1;
            t.mean_selection_time_us = r.selection_time_us;
            t.mean_energy_mas = r.energy_consumed_mas;
            t.mean_optimality = r.optimality_ratio;
            t.rounds.push_back(r);
            cell.traces.push_back(std::move(t));
          }
        } else {
          SimulationReport r =
              run_lifetime_experiment(config, key.strategy, seed, request.trace);
          time_acc.add(r.mean_selection_time_us);
          energy_acc.add(r.mean_energy_mas);
          opt_acc.add(r.mean_optimality);
          life_acc.add(static_cast<double>(r.composition_lifetime));
          if (request.trace) cell.traces.push_back(std::move(r));
        }
      }
      cell.n_seeds = config.repetitions;
      cell.selection_time_us = time_acc.aggregate();
      cell.energy_mas = energy_acc.aggregate();
      cell.optimality = opt_acc.aggregate();
      cell.lifetime_rounds = life_acc.aggregate();
      cell.mean_pulses = config.repetitions > 0 ? pulse_sum / config.repetitions : 0.0;
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  };

  unsigned threads = request.threads != 0 ? request.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
          run_cell(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return reports;
}

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = [] {
    std::vector<FigurePreset> p;
    std::vector<std::pair<int, int>> m_grid_10;
    for (int m = 100; m <= 1000; m += 100) m_grid_10.push_back({10, m});
    std::vector<std::pair<int, int>> fig3_cells;
    for (int n : {10, 15, 20}) {
      for (int m = 100; m <= 1000; m += 100) fig3_cells.push_back({n, m});
    }
    std::vector<std::pair<int, int>> n_grid_100;
    for (int n = 10; n <= 50; n += 10) n_grid_100.push_back({n, 100});

    p.push_back({"fig3", ExperimentKind::SingleRound, fig3_cells, "selection_time_us"});
    p.push_back({"fig4", ExperimentKind::SingleRound, m_grid_10, "energy_mas"});
    p.push_back({"fig5", ExperimentKind::SingleRound, n_grid_100, "energy_mas"});
    p.push_back({"fig6", ExperimentKind::Lifetime, m_grid_10, "lifetime_rounds"});
    p.push_back({"fig7", ExperimentKind::SingleRound, m_grid_10, "optimality"});
    return p;
  }();
  return presets;
}

}  // namespace bosc
