#include "bosc/baselines.hpp"

#include <string>

#include "bosc/error.hpp"
#include "bosc/metrics.hpp"
#include "bosc/pareto.hpp"
#include "lex_sweep.hpp"

namespace bosc {

CompositionPath solve_mono(const CompositionGraph& g, const UtilityWeights& weights,
                           BaselineKind kind) {
  weights.validate();
  const NormalizationBounds nb = compute_bounds(g);
  const auto contrib = detail::contributions(g, nb, weights);
  const auto best =
      detail::lex_best_path(g, contrib, kind == BaselineKind::QosOnly, kObjectiveTol);
  const double offset = qos_offset(nb, weights);
  ObjectiveVector objectives = kind == BaselineKind::QosOnly
                                   ? ObjectiveVector{best.primary, best.secondary}
                                   : ObjectiveVector{best.secondary, best.primary};
  objectives.qos -= offset;
  if (objectives.qos < 0.0 && objectives.qos >= -kObjectiveTol) objectives.qos = 0.0;
  return g.make_path(best.nodes, objectives);
}

std::vector<CompositionPath> brute_force_pareto(const CompositionGraph& g,
                                                const UtilityWeights& weights,
                                                std::uint64_t cap) {
  weights.validate();
  if (path_count(g) > cap) {
    throw Error(ErrorCode::InstanceTooLarge,
                "path count exceeds oracle cap of " + std::to_string(cap));
  }
  const NormalizationBounds nb = compute_bounds(g);
  const std::size_t n = g.task_count();

  ParetoFrontier frontier;
  std::vector<std::size_t> odo(n, 0);
  std::vector<NodeId> nodes(n);
  for (;;) {
    double time_ms = 0.0, cost = 0.0, ep = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      nodes[c] = g.available_nodes(c)[odo[c]];
      const CandidateService& s = g.service(nodes[c]);
      time_ms += service_time_ms(s);
      cost += s.cost;
      ep += energy_profile(s);
    }
    frontier.insert({qos_utility(time_ms, cost, nb, weights), ep}, nodes);

    std::size_t c = n;
    while (c-- > 0) {
      if (++odo[c] < g.available_count(c)) break;
      odo[c] = 0;
      if (c == 0) {
        std::vector<CompositionPath> out;
        out.reserve(frontier.size());
        for (const auto& e : frontier.entries()) out.push_back(g.make_path(e.nodes, e.value));
        return out;
      }
    }
  }
}

}  // namespace bosc
