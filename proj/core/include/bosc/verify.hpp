#ifndef BOSC_VERIFY_HPP
#define BOSC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bosc/baselines.hpp"
#include "bosc/pulse.hpp"
#include "bosc/service.hpp"

namespace bosc {

struct VerifyParams {
  int count = 100;
  std::uint64_t seed = 1;
  int max_tasks = 5;
  int max_candidates = 6;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  SolveOptions solve_options{};
};

struct VerifyMismatch {
  std::uint64_t instance_seed = 0;
  std::string detail;
  std::vector<std::vector<CandidateService>> instance;   // as generated
  std::vector<std::vector<CandidateService>> minimized;  // greedily shrunk repro
};

struct VerifyResult {
  int instances_run = 0;
  std::vector<VerifyMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Random small instance for oracle cross-checks. The battery-hosted fraction
// cycles with the seed; some devices are drawn near or below threshold so the
// availability pruning is exercised; the first candidate of each class is
// forced available to keep the instance feasible.
std::vector<std::vector<CandidateService>> make_verify_instance(std::uint64_t seed, int max_tasks,
                                                                int max_candidates);

// Pulse frontier vs brute-force frontier on `count` random instances
// (objective vectors compared within the solve tolerance). Mismatching
// instances are shrunk to a minimal reproduction.
VerifyResult verify_random_instances(const VerifyParams& params);

}  // namespace bosc

#endif  // BOSC_VERIFY_HPP
