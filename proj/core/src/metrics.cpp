#include "bosc/metrics.hpp"

#include <limits>

#include "bosc/error.hpp"

namespace bosc {

double consumed_energy_mas(const CandidateService& s) {
  if (!s.device) {
    throw Error(ErrorCode::NotBatteryHosted, "service " + s.id + " has no device");
  }
  return s.energy_rate_ma * (service_time_ms(s) / 1000.0);
}

double energy_profile(const CandidateService& s) {
  if (!s.device) return 0.0;
  const double re = residual_energy(*s.device);
  if (re <= 0.0) {
    throw Error(ErrorCode::Unavailable, "service " + s.id + " has no residual energy");
  }
  return consumed_energy_mas(s) / re;
}

PathAggregate aggregate_path(std::span<const CandidateService* const> path) {
  PathAggregate agg;
  for (const CandidateService* s : path) {
    agg.time_ms += service_time_ms(*s);
    agg.cost += s->cost;
    agg.energy_profile += energy_profile(*s);
  }
  return agg;
}

NormalizationBounds compute_bounds(const CompositionGraph& g) {
  NormalizationBounds b;
  for (std::size_t i = 0; i < g.task_count(); ++i) {
    const auto& nodes = g.available_nodes(i);
    if (nodes.empty()) {
      throw Error(ErrorCode::Infeasible, "class " + std::to_string(i + 1) + " unavailable");
    }
    double tmin = std::numeric_limits<double>::infinity(), tmax = -tmin;
    double cmin = tmin, cmax = -tmin;
    for (NodeId v : nodes) {
      const CandidateService& s = g.service(v);
      const double t = service_time_ms(s);
      tmin = std::min(tmin, t);
      tmax = std::max(tmax, t);
      cmin = std::min(cmin, s.cost);
      cmax = std::max(cmax, s.cost);
    }
    b.time_min_ms += tmin;
    b.time_max_ms += tmax;
    b.cost_min += cmin;
    b.cost_max += cmax;
  }
  return b;
}

namespace {

double norm(double v, double lo, double hi) {
  return hi > lo ? (v - lo) / (hi - lo) : 0.0;
}

}  // namespace

double qos_utility(double time_ms, double cost, const NormalizationBounds& b,
                   const UtilityWeights& w) {
  return w.time_weight * norm(time_ms, b.time_min_ms, b.time_max_ms) +
         w.cost_weight * norm(cost, b.cost_min, b.cost_max);
}

double qos_offset(const NormalizationBounds& b, const UtilityWeights& w) {
  double offset = 0.0;
  if (b.time_max_ms > b.time_min_ms) {
    offset += w.time_weight * b.time_min_ms / (b.time_max_ms - b.time_min_ms);
  }
  if (b.cost_max > b.cost_min) {
    offset += w.cost_weight * b.cost_min / (b.cost_max - b.cost_min);
  }
  return offset;
}

ObjectiveVector node_contribution(const CandidateService& s, const NormalizationBounds& b,
                                  const UtilityWeights& w) {
  double qos = 0.0;
  if (b.time_max_ms > b.time_min_ms) {
    qos += w.time_weight * service_time_ms(s) / (b.time_max_ms - b.time_min_ms);
  }
  if (b.cost_max > b.cost_min) {
    qos += w.cost_weight * s.cost / (b.cost_max - b.cost_min);
  }
  return {qos, energy_profile(s)};
}

}  // namespace bosc
