#include "bosc/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bosc/error.hpp"

namespace bosc {

namespace {

using nlohmann::json;

const Aggregate& metric_of(const CellReport& cell, const std::string& metric) {
  if (metric == "selection_time_us") return cell.selection_time_us;
  if (metric == "energy_mas") return cell.energy_mas;
  if (metric == "optimality") return cell.optimality;
  if (metric == "lifetime_rounds") return cell.lifetime_rounds;
  throw Error(ErrorCode::InvalidConfig, "unknown metric '" + metric + "'");
}

json stats_to_json(const SolveStats& s) {
  return json{{"pulses", s.pulses},
              {"pruned_by_cycle", s.pruned_by_cycle},
              {"pruned_by_nadir", s.pruned_by_nadir},
              {"pruned_by_efficient_set", s.pruned_by_efficient_set},
              {"pruned_by_label", s.pruned_by_label},
              {"solutions_found", s.solutions_found}};
}

SolveStats stats_from_json(const json& j) {
  SolveStats s;
  s.pulses = j.value("pulses", 0ull);
  s.pruned_by_cycle = j.value("pruned_by_cycle", 0ull);
  s.pruned_by_nadir = j.value("pruned_by_nadir", 0ull);
  s.pruned_by_efficient_set = j.value("pruned_by_efficient_set", 0ull);
  s.pruned_by_label = j.value("pruned_by_label", 0ull);
  s.solutions_found = j.value("solutions_found", 0ull);
  return s;
}

json aggregate_to_json(const Aggregate& a) {
  return json{{"mean", a.mean}, {"stddev", a.stddev}};
}

Aggregate aggregate_from_json(const json& j) {
  return Aggregate{j.value("mean", 0.0), j.value("stddev", 0.0)};
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void write_figure_csv(std::ostream& out, const std::vector<CellReport>& cells,
                      const std::string& metric) {
  out << "tasks,candidates,strategy," << metric << "_mean," << metric << "_stddev,n_seeds,error\n";
  for (const CellReport& cell : cells) {
    out << cell.key.tasks << ',' << cell.key.candidates << ',' << to_string(cell.key.strategy)
        << ',';
    if (cell.error.empty()) {
      const Aggregate& a = metric_of(cell, metric);
      out << format_number(a.mean) << ',' << format_number(a.stddev) << ',' << cell.n_seeds
          << ",\n";
    } else {
      std::string msg = cell.error;
      for (char& ch : msg) {
        if (ch == ',' || ch == '\n') ch = ';';
      }
      out << ",,0," << msg << "\n";
    }
  }
}

void write_figure_csv(const std::filesystem::path& file, const std::vector<CellReport>& cells,
                      const std::string& metric) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + file.string());
  write_figure_csv(out, cells, metric);
}

std::string suite_to_json(const std::vector<CellReport>& cells) {
  json arr = json::array();
  for (const CellReport& cell : cells) {
    json c{{"tasks", cell.key.tasks},
           {"candidates", cell.key.candidates},
           {"strategy", to_string(cell.key.strategy)},
           {"kind", cell.kind == ExperimentKind::SingleRound ? "single_round" : "lifetime"},
           {"n_seeds", cell.n_seeds},
           {"selection_time_us", aggregate_to_json(cell.selection_time_us)},
           {"energy_mas", aggregate_to_json(cell.energy_mas)},
           {"optimality", aggregate_to_json(cell.optimality)},
           {"lifetime_rounds", aggregate_to_json(cell.lifetime_rounds)},
           {"mean_pulses", cell.mean_pulses}};
    if (!cell.error.empty()) c["error"] = cell.error;
    if (!cell.traces.empty()) {
      json traces = json::array();
      for (const SimulationReport& t : cell.traces) {
        json run{{"strategy", to_string(t.strategy)},
                 {"seed", t.seed},
                 {"composition_lifetime", t.composition_lifetime},
                 {"cap_reached", t.cap_reached},
                 {"mean_selection_time_us", t.mean_selection_time_us},
                 {"mean_energy_mas", t.mean_energy_mas},
                 {"mean_optimality", t.mean_optimality}};
        json rounds = json::array();
        for (const RoundRecord& r : t.rounds) {
          rounds.push_back(json{{"round", r.round},
                                {"selection_time_us", r.selection_time_us},
                                {"energy_consumed_mas", r.energy_consumed_mas},
                                {"qos_utility", r.qos_utility},
                                {"energy_profile", r.energy_profile},
                                {"optimality_ratio", r.optimality_ratio},
                                {"pruning", stats_to_json(r.pruning)}});
        }
        run["rounds"] = std::move(rounds);
        traces.push_back(std::move(run));
      }
      c["traces"] = std::move(traces);
    }
    arr.push_back(std::move(c));
  }
  return json{{"cells", std::move(arr)}}.dump(2) + "\n";
}

void write_suite_json(const std::filesystem::path& file, const std::vector<CellReport>& cells) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + file.string());
  out << suite_to_json(cells);
}

std::vector<CellReport> parse_suite_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array()) {
    throw Error(ErrorCode::ParseError, "suite document must contain a 'cells' array");
  }
  std::vector<CellReport> cells;
  for (const json& c : doc["cells"]) {
    CellReport cell;
    cell.key.tasks = c.value("tasks", 0);
    cell.key.candidates = c.value("candidates", 0);
    auto strat = strategy_from_string(c.value("strategy", ""));
    if (!strat) throw Error(ErrorCode::ParseError, "bad strategy in suite document");
    cell.key.strategy = *strat;
    cell.kind = c.value("kind", "single_round") == "lifetime" ? ExperimentKind::Lifetime
                                                              : ExperimentKind::SingleRound;
    cell.n_seeds = c.value("n_seeds", 0);
    if (c.contains("selection_time_us"))
      cell.selection_time_us = aggregate_from_json(c["selection_time_us"]);
    if (c.contains("energy_mas")) cell.energy_mas = aggregate_from_json(c["energy_mas"]);
    if (c.contains("optimality")) cell.optimality = aggregate_from_json(c["optimality"]);
    if (c.contains("lifetime_rounds"))
      cell.lifetime_rounds = aggregate_from_json(c["lifetime_rounds"]);
    cell.mean_pulses = c.value("mean_pulses", 0.0);
    cell.error = c.value("error", "");
    if (c.contains("traces")) {
      for (const json& t : c["traces"]) {
        SimulationReport run;
        auto s = strategy_from_string(t.value("strategy", ""));
        run.strategy = s.value_or(cell.key.strategy);
        run.seed = t.value("seed", 0ull);
        run.composition_lifetime = t.value("composition_lifetime", 0);
        run.cap_reached = t.value("cap_reached", false);
        run.mean_selection_time_us = t.value("mean_selection_time_us", 0.0);
        run.mean_energy_mas = t.value("mean_energy_mas", 0.0);
        run.mean_optimality = t.value("mean_optimality", 0.0);
        if (t.contains("rounds")) {
          for (const json& r : t["rounds"]) {
            RoundRecord rec;
            rec.round = r.value("round", 0);
            rec.selection_time_us = r.value("selection_time_us", 0.0);
            rec.energy_consumed_mas = r.value("energy_consumed_mas", 0.0);
            rec.qos_utility = r.value("qos_utility", 0.0);
            rec.energy_profile = r.value("energy_profile", 0.0);
            rec.optimality_ratio = r.value("optimality_ratio", 0.0);
            if (r.contains("pruning")) rec.pruning = stats_from_json(r["pruning"]);
            run.rounds.push_back(rec);
          }
        }
        cell.traces.push_back(std::move(run));
      }
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<CellReport> load_suite_json(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + file.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_suite_json(os.str());
}

}  // namespace bosc
