#ifndef BOSC_GRAPH_HPP
#define BOSC_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bosc/objective.hpp"
#include "bosc/service.hpp"

namespace bosc {

using NodeId = std::uint32_t;

// A full selection of one candidate per class, entrance to exit.
struct CompositionPath {
  std::vector<std::string> selections;          // candidate ids, one per class
  std::vector<std::size_t> selection_indices;   // positions within each class
  ObjectiveVector objectives;                   // reported (offset applied)
};

// Layered DAG over service classes with virtual entrance/exit portals.
// Node 0 is the entrance, node node_count()-1 the exit; service nodes cover
// the *available* candidates in class order. Unavailable candidates are kept
// for reporting but excluded from the adjacency. Immutable once built.
class CompositionGraph {
 public:
  std::size_t task_count() const { return classes_.size(); }
  std::size_t node_count() const { return nodes_.size(); }
  NodeId entrance() const { return 0; }
  NodeId exit_node() const { return static_cast<NodeId>(nodes_.size() - 1); }

  bool is_portal(NodeId v) const { return v == entrance() || v == exit_node(); }

  // Outgoing neighbors per the layered adjacency; empty only for the exit.
  // Throws UNKNOWN_NODE for out-of-range ids.
  const std::vector<NodeId>& successors(NodeId v) const;

  const CandidateService& service(NodeId v) const;
  std::size_t class_of(NodeId v) const;            // 0-based; portals throw
  std::size_t candidate_index(NodeId v) const;     // position within its class

  const std::vector<std::vector<CandidateService>>& classes() const { return classes_; }
  const std::vector<NodeId>& available_nodes(std::size_t class_idx) const {
    return layers_[class_idx];
  }
  std::size_t available_count(std::size_t class_idx) const { return layers_[class_idx].size(); }

  // Candidates excluded from the adjacency because their device is depleted.
  const std::vector<std::string>& excluded_ids() const { return excluded_; }

  // Maps a node sequence (portals allowed, ignored) to a CompositionPath with
  // the given reported objectives.
  CompositionPath make_path(const std::vector<NodeId>& nodes, ObjectiveVector objectives) const;

 private:
  friend CompositionGraph build_graph(std::vector<std::vector<CandidateService>> classes);

  struct NodeRef {
    std::int32_t class_idx;  // -1 for portals
    std::uint32_t cand_idx;
  };

  std::vector<std::vector<CandidateService>> classes_;
  std::vector<NodeRef> nodes_;
  std::vector<std::vector<NodeId>> layers_;  // available node ids per class
  std::vector<NodeId> exit_singleton_;       // successor list of the last class
  std::vector<NodeId> empty_;                // successor list of the exit
  std::vector<std::string> excluded_;
};

// Builds the layered graph. Errors: EMPTY_CLASS if any class is empty,
// INFEASIBLE if any class has no available candidate.
CompositionGraph build_graph(std::vector<std::vector<CandidateService>> classes);

inline const std::vector<NodeId>& successors(const CompositionGraph& g, NodeId v) {
  return g.successors(v);
}

// Product of available-candidate counts per class, saturating at UINT64_MAX.
std::uint64_t path_count(const CompositionGraph& g);

}  // namespace bosc

#endif  // BOSC_GRAPH_HPP
