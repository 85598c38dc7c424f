#ifndef BOSC_PULSE_HPP
#define BOSC_PULSE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bosc/graph.hpp"
#include "bosc/metrics.hpp"
#include "bosc/objective.hpp"
#include "bosc/pareto.hpp"

namespace bosc {

// Per-node admissible completion bounds and the nadir box, all in offset-free
// objective space. lower_* at a node bound the best completion strictly after
// the node (the node's own contribution is already in the pulse accumulator).
struct BoundsTable {
  std::vector<double> lower_qos;
  std::vector<double> lower_ep;
  ObjectiveVector nadir;
};

// Bounded per-slot store of objective tuples seen by surviving pulses; a new
// pulse dominated by a stored label is discarded. Slots are per node in
// general; on the layered graph all nodes of a class share one slot, which is
// equivalent to per-node stores because the class shares its successor set.
// Each slot is kept sorted by qos (ep non-increasing) and mutually
// non-dominated.
class LabelStore {
 public:
  LabelStore(std::size_t slot_count, int capacity);

  // Returns false if a stored label in the slot dominates val. Otherwise
  // stores val: labels val dominates are dropped; if the slot is full and
  // nothing was dropped the incoming label is discarded (storing is only an
  // optimization).
  bool admit(std::uint32_t slot, const ObjectiveVector& val, double tol);

  // Smallest ep among labels with qos <= qos_limit; +inf when none.
  double min_ep_below(std::uint32_t slot, double qos_limit) const;

  std::span<const ObjectiveVector> labels(std::uint32_t slot) const;
  int capacity() const { return capacity_; }

 private:
  int capacity_;
  std::vector<std::vector<ObjectiveVector>> slots_;
};

// Test-only fault switch used by the verification harness self-test.
enum class FaultInjection { None, ShrinkNadir };

struct SolveOptions {
  UtilityWeights weights{};
  int label_capacity = 1000000;
  double tolerance = kObjectiveTol;
  bool prune_cycles = true;
  bool prune_nadir = true;
  bool prune_efficient_set = true;
  bool prune_labels = true;
  // Completion-bound staircase: a bucketed lower-bound set over the
  // qos-budgeted min-ep completions per class, used to discard whole subtrees
  // the per-node corner bound cannot. Pure accelerator; only active while the
  // nadir and efficient-set prunings are both on.
  bool use_completion_bound = true;
  int completion_bound_buckets = 128;
  FaultInjection fault = FaultInjection::None;
};

struct SolveStats {
  std::uint64_t pulses = 0;
  std::uint64_t pruned_by_cycle = 0;
  std::uint64_t pruned_by_nadir = 0;
  std::uint64_t pruned_by_efficient_set = 0;
  std::uint64_t pruned_by_label = 0;
  std::uint64_t pruned_by_completion_bound = 0;
  std::uint64_t solutions_found = 0;
};

struct SolveResult {
  std::vector<CompositionPath> frontier;  // mutually non-dominated, qos ascending
  SolveStats stats;
  double qos_offset = 0.0;
};

// Backward sweeps over the layered DAG: per-node completion lower bounds for
// each objective plus the nadir point from the two lexicographic
// mono-objective optima.
BoundsTable initialize(const CompositionGraph& g, const NormalizationBounds& bounds,
                       const UtilityWeights& weights);

// Full pipeline: bounds, initialization, depth-first pulse propagation with
// the four prunings, offset reapplied on the reported frontier.
SolveResult solve(const CompositionGraph& g, const SolveOptions& options = {});

// Deterministic single-path choice from a frontier: Chebyshev knee over
// min-max normalized objectives with a concave transform on the energy axis.
// Ties break toward lower qos, then lexicographically by selections.
CompositionPath pick_balanced(std::span<const CompositionPath> frontier);

namespace detail {

// One shared successor list. The bound arrays, when present, let the engine
// enumerate only the children that can survive the nadir and efficient-set
// tests: nodes must then be sorted by key_qos ascending, key_qos[k] is the
// child's completed qos bound (contribution + lower_qos), ep_bound[k] its
// completed ep bound, and seg_min_ep an implicit segment tree of minima over
// ep_bound. Leave the arrays empty for plain exhaustive expansion.
struct SuccessorBlock {
  std::vector<NodeId> nodes;
  std::vector<double> key_qos;
  std::vector<double> ep_bound;
  std::vector<double> seg_min_ep;
  std::size_t seg_leaves = 0;          // leaf count (power of two)
  double lower_qos_const = 0.0;        // shared lower_qos of the children

  void build_bounds();  // fills seg_min_ep from ep_bound
};

// Lower-bound staircase over completions: point i is
// (qos_lo + i * step, min_ep[i]) and every reachable completion is
// component-wise at or above some point. +inf marks infeasible budgets.
struct Staircase {
  double qos_lo = 0.0;
  double step = 0.0;
  std::vector<double> min_ep;
};

// Graph view the pulse engine walks. solve() assembles it from a
// CompositionGraph; tests may assemble arbitrary (even cyclic) adjacencies.
// label_slot maps nodes to label-store slots; sharing a slot is only sound
// when the sharing nodes have identical successor sets (a class of the
// layered graph). Leave empty for per-node slots. expansion_bound, when
// nonempty, holds one completion staircase per slot.
struct SearchGraph {
  std::vector<ObjectiveVector> contribution;       // per node
  std::vector<const SuccessorBlock*> successors;   // per node
  NodeId entrance = 0;
  NodeId exit = 0;
  std::vector<std::uint32_t> label_slot;
  std::uint32_t label_slot_count = 0;
  std::vector<Staircase> expansion_bound;
};

struct EngineOutcome {
  ParetoFrontier frontier;
  SolveStats stats;
};

// `seeds` are known feasible solutions inserted into the efficient set before
// the first pulse; they sharpen the efficient-set pruning and never change
// the result (insertion applies the exact dominance rules).
EngineOutcome run_pulse(const SearchGraph& sg, const BoundsTable& bounds,
                        const SolveOptions& options,
                        const std::vector<ParetoFrontier::Entry>& seeds = {});

}  // namespace detail

}  // namespace bosc

#endif  // BOSC_PULSE_HPP
