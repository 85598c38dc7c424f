#include "bosc/graph.hpp"

#include <limits>
#include <utility>

#include "bosc/error.hpp"

namespace bosc {

CompositionGraph build_graph(std::vector<std::vector<CandidateService>> classes) {
  if (classes.empty()) {
    throw Error(ErrorCode::EmptyClass, "no service classes given");
  }
  CompositionGraph g;
  g.classes_ = std::move(classes);

  const std::size_t n = g.classes_.size();
  g.nodes_.push_back({-1, 0});  // entrance
  g.layers_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& cls = g.classes_[i];
    if (cls.empty()) {
      throw Error(ErrorCode::EmptyClass, "class " + std::to_string(i + 1) + " has no candidates");
    }
    for (std::size_t j = 0; j < cls.size(); ++j) {
      cls[j].class_index = static_cast<int>(i + 1);
      if (is_available(cls[j])) {
        g.layers_[i].push_back(static_cast<NodeId>(g.nodes_.size()));
        g.nodes_.push_back({static_cast<std::int32_t>(i), static_cast<std::uint32_t>(j)});
      } else {
        g.excluded_.push_back(cls[j].id);
      }
    }
    if (g.layers_[i].empty()) {
      throw Error(ErrorCode::Infeasible,
                  "class " + std::to_string(i + 1) + " has no available candidate");
    }
  }
  g.nodes_.push_back({-1, 1});  // exit
  g.exit_singleton_.push_back(g.exit_node());
  return g;
}

const std::vector<NodeId>& CompositionGraph::successors(NodeId v) const {
  if (v >= nodes_.size()) {
    throw Error(ErrorCode::UnknownNode, "node " + std::to_string(v));
  }
  if (v == entrance()) return layers_.front();
  if (v == exit_node()) return empty_;
  const std::size_t c = static_cast<std::size_t>(nodes_[v].class_idx);
  return c + 1 == layers_.size() ? exit_singleton_ : layers_[c + 1];
}

const CandidateService& CompositionGraph::service(NodeId v) const {
  if (v >= nodes_.size() || is_portal(v)) {
    throw Error(ErrorCode::UnknownNode, "node " + std::to_string(v) + " is not a service node");
  }
  const NodeRef& r = nodes_[v];
  return classes_[static_cast<std::size_t>(r.class_idx)][r.cand_idx];
}

std::size_t CompositionGraph::class_of(NodeId v) const {
  if (v >= nodes_.size() || is_portal(v)) {
    throw Error(ErrorCode::UnknownNode, "node " + std::to_string(v) + " is not a service node");
  }
  return static_cast<std::size_t>(nodes_[v].class_idx);
}

std::size_t CompositionGraph::candidate_index(NodeId v) const {
  if (v >= nodes_.size() || is_portal(v)) {
    throw Error(ErrorCode::UnknownNode, "node " + std::to_string(v) + " is not a service node");
  }
  return nodes_[v].cand_idx;
}

CompositionPath CompositionGraph::make_path(const std::vector<NodeId>& nodes,
                                            ObjectiveVector objectives) const {
  CompositionPath path;
  path.objectives = objectives;
  path.selections.reserve(task_count());
  path.selection_indices.reserve(task_count());
  for (NodeId v : nodes) {
    if (is_portal(v)) continue;
    path.selections.push_back(service(v).id);
    path.selection_indices.push_back(candidate_index(v));
  }
  return path;
}

std::uint64_t path_count(const CompositionGraph& g) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < g.task_count(); ++i) {
    const std::uint64_t m = g.available_count(i);
    if (m != 0 && count > std::numeric_limits<std::uint64_t>::max() / m) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= m;
  }
  return count;
}

}  // namespace bosc
