// Internal helpers shared by the pulse initialization and the mono-objective
// baselines. The graph is layered with identical successor sets per class, so
// optimal completions decompose per class and the backward sweep degenerates
// to independent per-class scans.
#ifndef BOSC_SRC_LEX_SWEEP_HPP
#define BOSC_SRC_LEX_SWEEP_HPP

#include <algorithm>
#include <vector>

#include "bosc/graph.hpp"
#include "bosc/metrics.hpp"
#include "bosc/objective.hpp"

namespace bosc::detail {

// Contributions indexed by node id; portals contribute zero.
inline std::vector<ObjectiveVector> contributions(const CompositionGraph& g,
                                                  const NormalizationBounds& b,
                                                  const UtilityWeights& w) {
  std::vector<ObjectiveVector> out(g.node_count());
  for (std::size_t c = 0; c < g.task_count(); ++c) {
    for (NodeId v : g.available_nodes(c)) {
      out[v] = node_contribution(g.service(v), b, w);
    }
  }
  return out;
}

struct LexPath {
  std::vector<NodeId> nodes;  // one per class
  double primary = 0.0;
  double secondary = 0.0;
};

// Lexicographic minimum over full paths: min primary sum, then min secondary
// among primary-optima (ties within tol), further ties to the smallest
// candidate id. primary_is_qos selects which component leads.
inline LexPath lex_best_path(const CompositionGraph& g,
                             const std::vector<ObjectiveVector>& contrib, bool primary_is_qos,
                             double tol) {
  LexPath best;
  best.nodes.reserve(g.task_count());
  for (std::size_t c = 0; c < g.task_count(); ++c) {
    std::vector<NodeId> order(g.available_nodes(c));
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return g.service(a).id < g.service(b).id; });
    NodeId pick = order.front();
    auto key = [&](NodeId v) {
      const ObjectiveVector& o = contrib[v];
      return primary_is_qos ? std::pair{o.qos, o.ep} : std::pair{o.ep, o.qos};
    };
    auto [bp, bs] = key(pick);
    for (std::size_t k = 1; k < order.size(); ++k) {
      auto [p, s] = key(order[k]);
      if (p < bp - tol || (p <= bp + tol && s < bs - tol)) {
        pick = order[k];
        bp = p;
        bs = s;
      }
    }
    best.nodes.push_back(pick);
    best.primary += bp;
    best.secondary += bs;
  }
  return best;
}

}  // namespace bosc::detail

#endif  // BOSC_SRC_LEX_SWEEP_HPP
