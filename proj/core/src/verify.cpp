#include "bosc/verify.hpp"

#include <cmath>
#include <exception>
#include <optional>
#include <sstream>

#include "bosc/baselines.hpp"
#include "bosc/rng.hpp"

namespace bosc {

namespace {

constexpr double kCmaxMas = 1500.0 * 3600.0;

std::optional<std::string> frontier_mismatch(const CompositionGraph& g,
                                             const VerifyParams& params) {
  std::vector<CompositionPath> got, want;
  try {
    got = solve(g, params.solve_options).frontier;
    want = brute_force_pareto(g, params.solve_options.weights, params.oracle_cap);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
  const double tol = params.solve_options.tolerance;
  if (got.size() != want.size()) {
    std::ostringstream os;
    os << "frontier size " << got.size() << " vs oracle " << want.size();
    return os.str();
  }
  for (std::size_t i = 0; i < got.size(); ++i) {
    const auto& a = got[i].objectives;
    const auto& b = want[i].objectives;
    if (std::abs(a.qos - b.qos) > tol || std::abs(a.ep - b.ep) > tol) {
      std::ostringstream os;
      os.precision(17);
      os << "objective " << i << ": (" << a.qos << ", " << a.ep << ") vs oracle (" << b.qos
         << ", " << b.ep << ")";
      return os.str();
    }
  }
  return std::nullopt;
}

bool still_mismatches(const std::vector<std::vector<CandidateService>>& classes,
                      const VerifyParams& params) {
  try {
    return frontier_mismatch(build_graph(classes), params).has_value();
  } catch (const std::exception&) {
    return false;  // a shrink that breaks feasibility is not a reproduction
  }
}

std::vector<std::vector<CandidateService>> shrink(
    std::vector<std::vector<CandidateService>> classes, const VerifyParams& params) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < classes.size() && classes.size() > 1; ++c) {
      auto trial = classes;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(c));
      if (still_mismatches(trial, params)) {
        classes = std::move(trial);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t j = 0; j < classes[c].size() && classes[c].size() > 1; ++j) {
        auto trial = classes;
        trial[c].erase(trial[c].begin() + static_cast<std::ptrdiff_t>(j));
        if (still_mismatches(trial, params)) {
          classes = std::move(trial);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return classes;
}

}  // namespace

std::vector<std::vector<CandidateService>> make_verify_instance(std::uint64_t seed, int max_tasks,
                                                                int max_candidates) {
  Rng rng(mix_seed(seed, 0x7e51));
  const int n = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_tasks));
  const double hosted_fraction = static_cast<double>(seed % 5) / 4.0;

  std::vector<std::vector<CandidateService>> classes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int m = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_candidates));
    for (int j = 0; j < m; ++j) {
      CandidateService s;
      s.id = "s" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      s.execution_time_ms = rng.uniform(20.0, 1200.0);
      s.network_latency_ms = rng.uniform(20.0, 800.0);
      s.cost = rng.uniform(10.0, 20.0);
      const bool hosted = rng.unit() < hosted_fraction;
      if (hosted) {
        const double drain = rng.uniform(100.0, 10000.0);
        const double t_s = (s.execution_time_ms + s.network_latency_ms) / 1000.0;
        s.energy_rate_ma = drain / t_s;
        // Mostly healthy batteries, with some drawn around the threshold so
        // unavailable candidates show up; the first candidate stays healthy.
        double frac = rng.unit() < 0.1 && j > 0 ? rng.uniform(0.25, 0.35)
                                                : rng.uniform(0.7, 1.0);
        s.device = DeviceState{frac * kCmaxMas, kCmaxMas, 0.30 * kCmaxMas};
      }
      classes[static_cast<std::size_t>(i)].push_back(std::move(s));
    }
  }
  return classes;
}

VerifyResult verify_random_instances(const VerifyParams& params) {
  VerifyResult result;
  for (int k = 0; k < params.count; ++k) {
    const std::uint64_t instance_seed = params.seed + static_cast<std::uint64_t>(k);
    auto classes = make_verify_instance(instance_seed, params.max_tasks, params.max_candidates);
    ++result.instances_run;

    std::optional<std::string> mismatch;
    try {
      mismatch = frontier_mismatch(build_graph(classes), params);
    } catch (const std::exception& e) {
      mismatch = std::string("exception: ") + e.what();
    }
    if (mismatch) {
      VerifyMismatch m;
      m.instance_seed = instance_seed;
      m.detail = *mismatch;
      m.instance = classes;
      m.minimized = shrink(classes, params);
      result.mismatches.push_back(std::move(m));
    }
  }
  return result;
}

}  // namespace bosc
