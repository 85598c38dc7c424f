#ifndef BOSC_METRICS_HPP
#define BOSC_METRICS_HPP

#include <span>

#include "bosc/graph.hpp"
#include "bosc/objective.hpp"
#include "bosc/service.hpp"

namespace bosc {

// Round-trip time of one invocation: network latency plus execution time (ms).
inline double service_time_ms(const CandidateService& s) {
  return s.network_latency_ms + s.execution_time_ms;
}

// Energy drawn by one invocation as estimated by the composer: rate (mA)
// times service time converted to seconds. Throws NOT_BATTERY_HOSTED for
// software services.
double consumed_energy_mas(const CandidateService& s);

// Consumed-to-residual energy ratio; 0 for software services. Throws
// UNAVAILABLE when battery-hosted with no residual charge.
double energy_profile(const CandidateService& s);

struct PathAggregate {
  double time_ms = 0.0;
  double cost = 0.0;
  double energy_profile = 0.0;
};

// Component-wise sums along a path; the energy profile sums only
// battery-hosted contributions.
PathAggregate aggregate_path(std::span<const CandidateService* const> path);

// Per-class attribute extrema over available candidates, summed across
// classes.
NormalizationBounds compute_bounds(const CompositionGraph& g);

// SAW utility of aggregated time and cost, min-max normalized against the
// bounds; in [0,1] for any path whose class attributes lie within the bounds.
// Degenerate ranges normalize to 0.
double qos_utility(double time_ms, double cost, const NormalizationBounds& b,
                   const UtilityWeights& w);

// Path-independent part of the normalization. Summed node contributions along
// any full path minus this offset reproduce qos_utility exactly.
double qos_offset(const NormalizationBounds& b, const UtilityWeights& w);

// Additive per-node share of the path objectives: the qos component carries
// the normalization denominators but not the offset, the ep component is the
// service's energy profile.
ObjectiveVector node_contribution(const CandidateService& s, const NormalizationBounds& b,
                                  const UtilityWeights& w);

}  // namespace bosc

#endif  // BOSC_METRICS_HPP
