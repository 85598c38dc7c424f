#ifndef BOSC_PARETO_HPP
#define BOSC_PARETO_HPP

#include <vector>

#include "bosc/graph.hpp"
#include "bosc/objective.hpp"

namespace bosc {

// Online efficient set over 2D objective vectors, kept sorted by qos ascending
// (hence ep strictly descending). A point exactly tied with an incumbent
// (within tol) is rejected, so the set keeps one representative per objective
// point.
class ParetoFrontier {
 public:
  struct Entry {
    ObjectiveVector value;
    std::vector<NodeId> nodes;
  };

  explicit ParetoFrontier(double tol = kObjectiveTol) : tol_(tol) {}

  // True if some member weakly dominates v; such a point can never enter the
  // set. Also the efficient-set pruning predicate when v is a completion
  // lower bound.
  bool would_reject(const ObjectiveVector& v) const;

  // Smallest ep among members with qos <= qos_limit; +inf when none.
  double min_ep_below(double qos_limit) const;

  // Inserts unless weakly dominated; evicts members the new point dominates.
  // Returns true if inserted.
  bool insert(const ObjectiveVector& v, std::vector<NodeId> nodes);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double tolerance() const { return tol_; }

 private:
  std::size_t first_at_or_above(double qos) const;  // lower bound by qos

  double tol_;
  std::vector<Entry> entries_;
};

}  // namespace bosc

#endif  // BOSC_PARETO_HPP
