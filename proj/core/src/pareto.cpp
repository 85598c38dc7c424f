#include "bosc/pareto.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace bosc {

std::size_t ParetoFrontier::first_at_or_above(double qos) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), qos,
                             [](const Entry& e, double q) { return e.value.qos < q; });
  return static_cast<std::size_t>(it - entries_.begin());
}

double ParetoFrontier::min_ep_below(double qos_limit) const {
  // Members with qos <= qos_limit form a prefix; the last of them has the
  // smallest ep among them.
  const std::size_t k = first_at_or_above(qos_limit);
  if (k == 0) return std::numeric_limits<double>::infinity();
  return entries_[k - 1].value.ep;
}

bool ParetoFrontier::would_reject(const ObjectiveVector& v) const {
  return min_ep_below(v.qos + tol_) <= v.ep + tol_;
}

bool ParetoFrontier::insert(const ObjectiveVector& v, std::vector<NodeId> nodes) {
  if (would_reject(v)) return false;
  // Members weakly dominated by v: qos >= v.qos - tol and ep >= v.ep - tol.
  // By sortedness they form a contiguous run starting at the first member
  // with qos >= v.qos - tol.
  std::size_t lo = first_at_or_above(v.qos - tol_);
  std::size_t hi = lo;
  while (hi < entries_.size() && entries_[hi].value.ep >= v.ep - tol_) ++hi;
  if (lo == hi) {
    entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(lo),
                    Entry{v, std::move(nodes)});
  } else {
    entries_[lo] = Entry{v, std::move(nodes)};
    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(lo) + 1,
                   entries_.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return true;
}

}  // namespace bosc
