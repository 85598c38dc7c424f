#ifndef BOSC_BASELINES_HPP
#define BOSC_BASELINES_HPP

#include <cstdint>
#include <vector>

#include "bosc/graph.hpp"
#include "bosc/objective.hpp"

namespace bosc {

enum class BaselineKind { QosOnly, EnergyOnly };

// Exact minimizer of a single objective over the layered DAG; ties break by
// the other objective, then by candidate id.
CompositionPath solve_mono(const CompositionGraph& g, const UtilityWeights& weights,
                           BaselineKind kind);

inline constexpr std::uint64_t kDefaultOracleCap = 200000;

// Exhaustive oracle: enumerates every full path, evaluates both objectives
// directly from the aggregate formulas (independent of the solver's additive
// decomposition), and filters with the same dominance tie rule as the pulse
// search. Throws INSTANCE_TOO_LARGE above the cap.
std::vector<CompositionPath> brute_force_pareto(const CompositionGraph& g,
                                                const UtilityWeights& weights,
                                                std::uint64_t cap = kDefaultOracleCap);

}  // namespace bosc

#endif  // BOSC_BASELINES_HPP
