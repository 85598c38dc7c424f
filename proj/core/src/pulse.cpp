#include "bosc/pulse.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "bosc/error.hpp"
#include "lex_sweep.hpp"

namespace bosc {

LabelStore::LabelStore(std::size_t slot_count, int capacity)
    : capacity_(capacity), slots_(slot_count) {
  if (capacity < 1) {
    throw Error(ErrorCode::InvalidConfig, "label capacity must be >= 1");
  }
}

bool LabelStore::admit(std::uint32_t slot, const ObjectiveVector& val, double tol) {
  auto& labels = slots_[slot];
  // Sorted by qos ascending with ep non-increasing, so the candidate
  // dominators of val sit just below val's qos position.
  auto pos = std::lower_bound(labels.begin(), labels.end(), val.qos + tol,
                              [](const ObjectiveVector& l, double q) { return l.qos <= q; });
  for (auto it = pos; it != labels.begin();) {
    --it;
    if (it->ep > val.ep + tol) break;  // earlier labels have ep at least this large
    if (dominates(*it, val, tol)) return false;
  }
  // Evict stored labels val dominates: they sit at qos >= val.qos - tol with
  // ep >= val.ep - tol, a contiguous run by sortedness.
  auto lo = std::lower_bound(labels.begin(), labels.end(), val.qos - tol,
                             [](const ObjectiveVector& l, double q) { return l.qos < q; });
  auto hi = lo;
  while (hi != labels.end() && hi->ep >= val.ep - tol) {
    if (!dominates(val, *hi, tol)) break;  // an exact tie stays stored
    ++hi;
  }
  if (lo != hi) {
    lo = labels.erase(lo, hi);
    labels.insert(lo, val);
    return true;
  }
  if (static_cast<int>(labels.size()) >= capacity_) return true;  // full: drop incoming
  labels.insert(std::lower_bound(labels.begin(), labels.end(), val.qos,
                                 [](const ObjectiveVector& l, double q) { return l.qos < q; }),
                val);
  return true;
}

std::span<const ObjectiveVector> LabelStore::labels(std::uint32_t slot) const {
  return {slots_[slot].data(), slots_[slot].size()};
}

namespace {

BoundsTable make_bounds_table(const CompositionGraph& g,
                              const std::vector<ObjectiveVector>& contrib, double tol) {
  const std::size_t n = g.task_count();
  BoundsTable bt;
  bt.lower_qos.assign(g.node_count(), 0.0);
  bt.lower_ep.assign(g.node_count(), 0.0);

  // Backward over classes: every node of class c has the same completion
  // bound, the best entry value of class c+1.
  double next_q = 0.0, next_e = 0.0;  // best completion entering the class after c
  for (std::size_t c = n; c-- > 0;) {
    double enter_q = std::numeric_limits<double>::infinity();
    double enter_e = enter_q;
    for (NodeId v : g.available_nodes(c)) {
      bt.lower_qos[v] = next_q;
      bt.lower_ep[v] = next_e;
      enter_q = std::min(enter_q, contrib[v].qos + next_q);
      enter_e = std::min(enter_e, contrib[v].ep + next_e);
    }
    next_q = enter_q;
    next_e = enter_e;
  }
  bt.lower_qos[g.entrance()] = next_q;
  bt.lower_ep[g.entrance()] = next_e;

  const auto qos_opt = detail::lex_best_path(g, contrib, /*primary_is_qos=*/true, tol);
  const auto ep_opt = detail::lex_best_path(g, contrib, /*primary_is_qos=*/false, tol);
  bt.nadir = {ep_opt.secondary, qos_opt.secondary};
  return bt;
}

}  // namespace

BoundsTable initialize(const CompositionGraph& g, const NormalizationBounds& bounds,
                       const UtilityWeights& weights) {
  if (g.task_count() == 0) throw Error(ErrorCode::Infeasible, "empty graph");
  return make_bounds_table(g, detail::contributions(g, bounds, weights), kObjectiveTol);
}

namespace detail {

void SuccessorBlock::build_bounds() {
  seg_leaves = 1;
  while (seg_leaves < nodes.size()) seg_leaves <<= 1;
  seg_min_ep.assign(2 * seg_leaves, std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < nodes.size(); ++k) seg_min_ep[seg_leaves + k] = ep_bound[k];
  for (std::size_t i = seg_leaves; i-- > 1;) {
    seg_min_ep[i] = std::min(seg_min_ep[2 * i], seg_min_ep[2 * i + 1]);
  }
}

namespace {

class PulseEngine {
 public:
  PulseEngine(const SearchGraph& sg, const BoundsTable& bt, const SolveOptions& opt,
              const std::vector<ParetoFrontier::Entry>& seeds)
      : sg_(sg), bt_(bt), opt_(opt), frontier_(opt.tolerance),
        labels_(sg.label_slot.empty() ? sg.contribution.size() : sg.label_slot_count,
                opt.label_capacity),
        on_path_(sg.contribution.size(), 0),
        use_stairs_(opt.use_completion_bound && opt.prune_nadir && opt.prune_efficient_set &&
                    !sg.expansion_bound.empty()) {
    path_.reserve(64);
    for (const auto& seed : seeds) frontier_.insert(seed.value, seed.nodes);
  }

  EngineOutcome run() {
    pulse(sg_.entrance, {0.0, 0.0});
    return {std::move(frontier_), stats_};
  }

 private:
  std::uint32_t slot_of(NodeId v) const { return sg_.label_slot.empty() ? v : sg_.label_slot[v]; }

  bool subtree_dominated(const Staircase& st, const ObjectiveVector& acc) const {
    for (std::size_t i = 0; i < st.min_ep.size(); ++i) {
      if (std::isinf(st.min_ep[i])) continue;  // no completion within this budget
      if (!frontier_.would_reject(
              {acc.qos + st.qos_lo + static_cast<double>(i) * st.step, acc.ep + st.min_ep[i]})) {
        return false;
      }
    }
    return true;
  }

  void pulse(NodeId v, ObjectiveVector acc) {
    ++stats_.pulses;
    const double tol = opt_.tolerance;
    if (v == sg_.exit) {
#ifndef NDEBUG
      ObjectiveVector check{0.0, 0.0};
      for (NodeId u : path_) check = check + sg_.contribution[u];
      assert(std::abs(check.qos - acc.qos) <= 1e-9 && std::abs(check.ep - acc.ep) <= 1e-9);
#endif
      if (frontier_.insert(acc, path_)) ++stats_.solutions_found;
      return;
    }
    if (opt_.prune_cycles && on_path_[v]) {
      ++stats_.pruned_by_cycle;
      return;
    }
    if (opt_.prune_nadir &&
        !(acc.qos <= bt_.nadir.qos + tol && acc.ep <= bt_.nadir.ep + tol)) {
      ++stats_.pruned_by_nadir;
      return;
    }
    if (opt_.prune_efficient_set &&
        frontier_.would_reject({acc.qos + bt_.lower_qos[v], acc.ep + bt_.lower_ep[v]})) {
      ++stats_.pruned_by_efficient_set;
      return;
    }
    // The label store is keyed by expansion front: all nodes sharing the slot
    // have identical successor sets, so a dominated accumulator here can only
    // reach solutions dominated through the earlier pulse.
    if (opt_.prune_labels && !labels_.admit(slot_of(v), acc, tol)) {
      ++stats_.pruned_by_label;
      return;
    }
    // Completion staircase: prune the subtree when every budgeted completion
    // bound lands on a dominated point. Budgets beyond the staircase cap are
    // covered by the nadir pruning, hence the gating.
    if (use_stairs_) {
      const Staircase& st = sg_.expansion_bound[slot_of(v)];
      if (!st.min_ep.empty() && subtree_dominated(st, acc)) {
        ++stats_.pruned_by_completion_bound;
        return;
      }
    }
    on_path_[v] = 1;
    path_.push_back(v);
    const SuccessorBlock& blk = *sg_.successors[v];
    if (blk.key_qos.empty()) {
      for (NodeId w : blk.nodes) pulse(w, acc + sg_.contribution[w]);
    } else {
      expand_bounded(blk, acc);
    }
    path_.pop_back();
    on_path_[v] = 0;
  }

  // Children sorted by qos bound: everything past the nadir cutoff dies at
  // once, and the segment tree over ep bounds walks straight to the children
  // the efficient-set test cannot reject. Rejected ranges are counted as if
  // each child had been pulsed and pruned at entry.
  void expand_bounded(const SuccessorBlock& blk, const ObjectiveVector& acc) {
    const double tol = opt_.tolerance;
    std::size_t limit = blk.nodes.size();
    if (opt_.prune_nadir) {
      const double key_cap = bt_.nadir.qos - acc.qos + blk.lower_qos_const + tol;
      limit = static_cast<std::size_t>(
          std::upper_bound(blk.key_qos.begin(), blk.key_qos.end(), key_cap) -
          blk.key_qos.begin());
      stats_.pulses += blk.nodes.size() - limit;
      stats_.pruned_by_nadir += blk.nodes.size() - limit;
    }
    if (!opt_.prune_efficient_set) {
      for (std::size_t k = 0; k < limit; ++k) {
        pulse(blk.nodes[k], acc + sg_.contribution[blk.nodes[k]]);
      }
      return;
    }
    enumerate(blk, acc, 1, 0, blk.seg_leaves, limit);
  }

  void enumerate(const SuccessorBlock& blk, const ObjectiveVector& acc, std::size_t node,
                 std::size_t lo, std::size_t hi, std::size_t limit) {
    if (lo >= limit) return;
    const std::size_t end = std::min(hi, std::min(limit, blk.nodes.size()));
    if (lo >= end) return;
    const double tol = opt_.tolerance;
    // The rejection threshold is non-increasing across the range, so testing
    // the range's smallest ep bound against the left-edge threshold is safe.
    const double threshold = frontier_.min_ep_below(acc.qos + blk.key_qos[lo] + tol);
    if (threshold <= acc.ep + blk.seg_min_ep[node] + tol) {
      stats_.pulses += end - lo;
      stats_.pruned_by_efficient_set += end - lo;
      return;
    }
    if (hi - lo == 1) {
      pulse(blk.nodes[lo], acc + sg_.contribution[blk.nodes[lo]]);
      return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    enumerate(blk, acc, 2 * node, lo, mid, limit);
    enumerate(blk, acc, 2 * node + 1, mid, hi, limit);
  }

  const SearchGraph& sg_;
  const BoundsTable& bt_;
  const SolveOptions& opt_;
  ParetoFrontier frontier_;
  SolveStats stats_;
  LabelStore labels_;
  std::vector<std::uint8_t> on_path_;
  std::vector<NodeId> path_;
  bool use_stairs_;
};

}  // namespace

EngineOutcome run_pulse(const SearchGraph& sg, const BoundsTable& bounds,
                        const SolveOptions& options,
                        const std::vector<ParetoFrontier::Entry>& seeds) {
  return PulseEngine(sg, bounds, options, seeds).run();
}

}  // namespace detail

SolveResult solve(const CompositionGraph& g, const SolveOptions& options) {
  options.weights.validate();
  const NormalizationBounds nb = compute_bounds(g);
  const auto contrib = detail::contributions(g, nb, options.weights);
#ifndef NDEBUG
  for (const auto& c : contrib) assert(c.qos >= 0.0 && c.ep >= 0.0);
#endif
  BoundsTable bt = make_bounds_table(g, contrib, options.tolerance);
  if (options.fault == FaultInjection::ShrinkNadir) {
    bt.nadir.qos *= 0.5;
    bt.nadir.ep *= 0.5;
  }

  // Explore each class best-first by the completed qos estimate; good
  // incumbents early make the efficient-set pruning bite sooner.
  const std::size_t n = g.task_count();
  std::vector<detail::SuccessorBlock> blocks(n);
  for (std::size_t c = 0; c < n; ++c) {
    auto& blk = blocks[c];
    blk.nodes = g.available_nodes(c);
    std::sort(blk.nodes.begin(), blk.nodes.end(), [&](NodeId a, NodeId b) {
      const double ka = contrib[a].qos + bt.lower_qos[a];
      const double kb = contrib[b].qos + bt.lower_qos[b];
      return ka != kb ? ka < kb : a < b;
    });
    const std::size_t sz = blk.nodes.size();
    blk.key_qos.resize(sz);
    blk.ep_bound.resize(sz);
    blk.lower_qos_const = bt.lower_qos[blk.nodes[0]];
    for (std::size_t k = 0; k < sz; ++k) {
      const NodeId v = blk.nodes[k];
      blk.key_qos[k] = contrib[v].qos + bt.lower_qos[v];
      blk.ep_bound[k] = contrib[v].ep + bt.lower_ep[v];
    }
    blk.build_bounds();
  }
  detail::SuccessorBlock exit_block;
  exit_block.nodes = {g.exit_node()};
  const detail::SuccessorBlock empty_block;

  detail::SearchGraph sg;
  sg.contribution = contrib;
  sg.entrance = g.entrance();
  sg.exit = g.exit_node();
  sg.successors.assign(g.node_count(), &empty_block);
  sg.successors[g.entrance()] = &blocks[0];
  // Nodes of a class share their successor set, hence also a label slot.
  sg.label_slot.assign(g.node_count(), 0);
  sg.label_slot_count = static_cast<std::uint32_t>(n) + 1;
  for (std::size_t c = 0; c < n; ++c) {
    const auto* next = (c + 1 == n) ? &exit_block : &blocks[c + 1];
    for (NodeId v : g.available_nodes(c)) {
      sg.successors[v] = next;
      sg.label_slot[v] = static_cast<std::uint32_t>(c) + 1;
    }
  }

  // Budgeted completion bounds per expansion slot: min-ep completion under a
  // qos budget, cumulative over buckets, built backward over classes. Budgets
  // past the nadir qos are left to the nadir pruning.
  if (options.use_completion_bound && options.completion_bound_buckets > 1) {
    const std::size_t buckets = static_cast<std::size_t>(options.completion_bound_buckets);
    sg.expansion_bound.resize(sg.label_slot_count);
    std::vector<double> lo(n + 1, 0.0), hi(n + 1, 0.0);
    for (std::size_t c = n; c-- > 0;) {
      double qmin = std::numeric_limits<double>::infinity(), qmax = -qmin;
      for (NodeId v : g.available_nodes(c)) {
        qmin = std::min(qmin, contrib[v].qos);
        qmax = std::max(qmax, contrib[v].qos);
      }
      lo[c] = lo[c + 1] + qmin;
      hi[c] = hi[c + 1] + qmax;
    }
    for (std::size_t s = n; s-- > 0;) {
      detail::Staircase& st = sg.expansion_bound[s];
      st.qos_lo = lo[s];
      const double cap = std::min(hi[s], bt.nadir.qos + 2.0 * options.tolerance);
      st.step = cap > lo[s] ? (cap - lo[s]) / static_cast<double>(buckets) : 0.0;
      st.min_ep.assign(buckets, std::numeric_limits<double>::infinity());
      const detail::Staircase* next = s + 1 < n ? &sg.expansion_bound[s + 1] : nullptr;
      for (NodeId v : g.available_nodes(s)) {
        const double q = contrib[v].qos;
        const double e = contrib[v].ep;
        for (std::size_t i = 0; i < buckets; ++i) {
          const double budget = st.qos_lo + static_cast<double>(i + 1) * st.step;
          const double rem = budget - q;
          double suffix;
          if (next == nullptr) {
            if (rem < -options.tolerance) continue;
            suffix = 0.0;
          } else {
            if (rem < next->qos_lo - options.tolerance) continue;
            // Smallest bucket whose budget covers rem; floor() can only pick
            // a larger bucket at exact boundaries, which stays a lower bound.
            std::size_t j = 0;
            if (next->step > 0.0) {
              const double ratio = (rem - next->qos_lo) / next->step;
              if (ratio >= static_cast<double>(buckets - 1)) {
                j = buckets - 1;
              } else if (ratio > 0.0) {
                j = static_cast<std::size_t>(ratio);
              }
            }
            suffix = next->min_ep[j];
          }
          st.min_ep[i] = std::min(st.min_ep[i], e + suffix);
        }
      }
    }
  }

  // Seed the efficient set with cheap feasible solutions spread across the
  // frontier (the two lexicographic optima plus a few weighted scalarization
  // optima); the exact insertion rules make seeding invisible in the result.
  std::vector<ParetoFrontier::Entry> seeds;
  auto add_seed = [&](const std::vector<NodeId>& class_nodes) {
    ParetoFrontier::Entry e;
    e.nodes.reserve(class_nodes.size() + 1);
    e.nodes.push_back(g.entrance());
    for (NodeId v : class_nodes) {
      e.value = e.value + contrib[v];
      e.nodes.push_back(v);
    }
    seeds.push_back(std::move(e));
  };
  add_seed(detail::lex_best_path(g, contrib, true, options.tolerance).nodes);
  add_seed(detail::lex_best_path(g, contrib, false, options.tolerance).nodes);
  for (double theta : {0.75, 0.5, 0.25}) {
    std::vector<NodeId> picks;
    picks.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      const auto& nodes = g.available_nodes(c);
      double qlo = contrib[nodes[0]].qos, qhi = qlo;
      double elo = contrib[nodes[0]].ep, ehi = elo;
      for (NodeId v : nodes) {
        qlo = std::min(qlo, contrib[v].qos);
        qhi = std::max(qhi, contrib[v].qos);
        elo = std::min(elo, contrib[v].ep);
        ehi = std::max(ehi, contrib[v].ep);
      }
      const double qs = qhi > qlo ? 1.0 / (qhi - qlo) : 0.0;
      const double es = ehi > elo ? 1.0 / (ehi - elo) : 0.0;
      NodeId best = nodes[0];
      double best_key = std::numeric_limits<double>::infinity();
      for (NodeId v : nodes) {
        const double key = theta * (contrib[v].qos - qlo) * qs +
                           (1.0 - theta) * (contrib[v].ep - elo) * es;
        if (key < best_key) {
          best = v;
          best_key = key;
        }
      }
      picks.push_back(best);
    }
    add_seed(picks);
  }

  auto outcome = detail::run_pulse(sg, bt, options, seeds);

  SolveResult result;
  result.stats = outcome.stats;
  result.qos_offset = qos_offset(nb, options.weights);
  result.frontier.reserve(outcome.frontier.size());
  for (const auto& entry : outcome.frontier.entries()) {
    ObjectiveVector reported{entry.value.qos - result.qos_offset, entry.value.ep};
    if (reported.qos < 0.0 && reported.qos >= -options.tolerance) reported.qos = 0.0;
    result.frontier.push_back(g.make_path(entry.nodes, reported));
  }
  return result;
}

namespace {

// Concave transform on the normalized energy axis: the energy span of these
// frontiers is heavy-tailed relative to qos, and a linear knee over-spends
// energy by several multiples of the energy-optimal path.
constexpr double kEnergyCurvature = 0.25;

}  // namespace

CompositionPath pick_balanced(std::span<const CompositionPath> frontier) {
  if (frontier.empty()) throw Error(ErrorCode::EmptySet, "empty frontier");

  double qlo = frontier[0].objectives.qos, qhi = qlo;
  double elo = frontier[0].objectives.ep, ehi = elo;
  for (const auto& p : frontier) {
    qlo = std::min(qlo, p.objectives.qos);
    qhi = std::max(qhi, p.objectives.qos);
    elo = std::min(elo, p.objectives.ep);
    ehi = std::max(ehi, p.objectives.ep);
  }
  auto norm = [](double v, double lo, double hi) { return hi > lo ? (v - lo) / (hi - lo) : 0.0; };

  const CompositionPath* best = nullptr;
  double best_score = 0.0;
  for (const auto& p : frontier) {
    const double nq = norm(p.objectives.qos, qlo, qhi);
    const double ne = norm(p.objectives.ep, elo, ehi);
    const double score = std::max(nq, std::pow(ne, kEnergyCurvature));
    if (best == nullptr || score < best_score - 1e-12 ||
        (score <= best_score + 1e-12 &&
         (p.objectives.qos < best->objectives.qos - 1e-12 ||
          (p.objectives.qos <= best->objectives.qos + 1e-12 &&
           p.selections < best->selections)))) {
      best = &p;
      best_score = score;
    }
  }
  return *best;
}

}  // namespace bosc
