#ifndef BOSC_OBJECTIVE_HPP
#define BOSC_OBJECTIVE_HPP

#include <cmath>

#include "bosc/error.hpp"

namespace bosc {

// Absolute tolerance for dominance comparisons. Objective values are O(1)
// after normalization, so a fixed absolute tolerance is appropriate.
inline constexpr double kObjectiveTol = 1e-9;

// A point in objective space: SAW utility of time/cost and energy profile.
// Both are dimensionless and lower is better.
struct ObjectiveVector {
  double qos = 0.0;
  double ep = 0.0;

  ObjectiveVector operator+(const ObjectiveVector& o) const { return {qos + o.qos, ep + o.ep}; }
};

// a is at least as good as b in both components (ties within tol allowed).
inline bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b,
                             double tol = kObjectiveTol) {
  return a.qos <= b.qos + tol && a.ep <= b.ep + tol;
}

// Strict Pareto dominance: <= in both, < in at least one (beyond tol).
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b,
                      double tol = kObjectiveTol) {
  return weakly_dominates(a, b, tol) && (a.qos < b.qos - tol || a.ep < b.ep - tol);
}

// SAW weighting factors for execution time and cost; must sum to 1.
struct UtilityWeights {
  double time_weight = 0.5;
  double cost_weight = 0.5;

  void validate() const {
    if (time_weight < 0.0 || time_weight > 1.0 || cost_weight < 0.0 || cost_weight > 1.0 ||
        std::abs(time_weight + cost_weight - 1.0) > 1e-12) {
      throw Error(ErrorCode::InvalidConfig, "utility weights must lie in [0,1] and sum to 1");
    }
  }
};

// Aggregated per-path attribute extrema: each bound is the sum over classes of
// the per-class min (resp. max) among available candidates.
struct NormalizationBounds {
  double time_min_ms = 0.0;
  double time_max_ms = 0.0;
  double cost_min = 0.0;
  double cost_max = 0.0;
};

}  // namespace bosc

#endif  // BOSC_OBJECTIVE_HPP
