#pragma once

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "../log.hpp"
#include "low_high.hpp"

namespace slidecube {

class StuckUnfinished : public ModelError {
 public:
  using ModelError::ModelError;
};

struct CompactorOptions {
  double safety{kSafetyFactor};
  bool enforce_safety{true};
  // Whole-configuration search is the last resort; only tried for small inputs.
  std::size_t search_max_cubes{6};
  std::size_t search_cap{200000};
};

struct AppliedPlan {
  Plan plan;
  PotentialLedger ledger;
};

struct CompactionResult {
  Configuration initial;
  Configuration final_config;
  std::vector<AppliedPlan> plans;
  LemmaStats lemmas;
  std::map<OpLabel, long> label_counts;
  std::int64_t total_moves{0};
  double max_safety{0.0};

  std::vector<Move> moves() const {
    std::vector<Move> out;
    for (const auto& ap : plans) out.insert(out.end(), ap.plan.moves.begin(), ap.plan.moves.end());
    return out;
  }
};

// Operations (a)-(i) in priority order within one frame. Logical coordinates.
// `depth` receives d of the low-high graph when it was built, else stays put.
inline std::optional<Plan> step_in_frame(const Configuration& logical, const Frame& frame,
                                         LemmaStats* stats = nullptr, int* depth = nullptr) {
  if (auto p = find_local_z_reduction(logical, frame, stats)) return p;
  if (auto p = find_shove_e(logical, frame, stats)) return p;
  if (auto m = find_greedy_high(logical, frame, stats))
    return Plan{framed(OpLabel::F, frame), {*m}, std::nullopt, std::nullopt};

  const LowHighGraph g = build_low_high_graph(logical, frame, stats);
  if (depth) *depth = g.d;
  if (g.d < 2) return std::nullopt;
  const auto cc = find_clear_component(logical, frame, g, stats);
  if (!cc) return std::nullopt;
  if (auto m = find_greedy_low(logical, frame, cc->cells)) {
    log(LogLevel::debug, "greedy low move ", *m, ": ", to_string(classify_low_move(logical, g, cc->component, *m)));
    return Plan{framed(OpLabel::G, frame), {*m}, cc->clearing_pillar, cc->component};
  }
  try {
    switch (cc->n_status) {
      case NStatus::AllPresent: return plan_floor_walk(logical, frame, *cc);
      case NStatus::AllAbsent: return plan_gather_shove(logical, frame, *cc);
      case NStatus::Mixed:
        if (stats) ++stats->n_cells_uniform;
        if (cc->clearing_pillar.height() == 1) return plan_clearing_drop(logical, frame, *cc);
        break;
    }
  } catch (const NoPath& e) {
    log(LogLevel::info, e.what());
  }
  return std::nullopt;
}

inline Plan to_real(const Plan& logical, const Frame& frame) {
  Plan out = logical;
  for (Move& m : out.moves) m = frame.to_real(m);
  return out;
}

// Last resort: relocate one cube to any cell of lower potential, or search
// over whole configurations when the instance is small.
inline std::optional<Plan> route_fallback(const Configuration& cfg, const CompactorOptions& opts = {}) {
  const CellSet cuts = cut_cubes(cfg);
  std::vector<Cell> movers;
  for (Cell c : cfg.sorted())
    if (!cuts.count(c)) movers.push_back(c);
  std::stable_sort(movers.begin(), movers.end(),
                   [](Cell a, Cell b) { return cube_potential(a) > cube_potential(b); });
  const auto allowed = near_box(cfg, 1);
  for (Cell c : movers) {
    const Potential pi = cube_potential(c);
    auto goal = [pi](Cell t) { return is_nonnegative(t) && cube_potential(t) < pi; };
    auto path = route_cube(cfg, c, goal, allowed);
    if (path && accept_plan(kSpatialFrame, cfg, *path)) return Plan{OpLabel::Route, *path, std::nullopt, std::nullopt};
  }
  if (cfg.size() <= opts.search_max_cubes) {
    CellSet all(cfg.begin(), cfg.end());
    const Potential pi = config_potential(cfg);
    auto goal = [pi](const Configuration& s) { return all_nonnegative(s) && config_potential(s) < pi; };
    auto path = local_search(cfg, all, allowed, goal, opts.search_cap);
    if (path && accept_plan(kSpatialFrame, cfg, *path)) return Plan{OpLabel::Route, *path, std::nullopt, std::nullopt};
  }
  return std::nullopt;
}

// Next plan in real coordinates: spatial operations, then the planar ones on
// the floor layer, then the fallback. Nothing iff cfg is finished. Planar
// lemma checks only count once the spatial graph is down to d <= 1.
inline std::optional<Plan> step(const Configuration& cfg, LemmaStats* stats = nullptr,
                                const CompactorOptions& opts = {}) {
  if (is_finished(cfg)) return std::nullopt;
  int depth = -1;
  if (auto p = step_in_frame(cfg, kSpatialFrame, stats, &depth)) return p;
  LemmaStats* planar_stats = depth >= 0 && depth <= 1 ? stats : nullptr;
  if (auto p = step_in_frame(kPlanarFrame.to_logical(cfg), kPlanarFrame, planar_stats))
    return to_real(*p, kPlanarFrame);
  if (auto p = route_fallback(cfg, opts)) return p;
  throw StuckUnfinished("no operation applies to an unfinished configuration");
}

namespace detail {

inline void apply_plan(CompactionResult& r, Configuration& cfg, Plan plan, const CompactorOptions& opts) {
  auto end = replay(cfg, plan.moves);
  if (!end) throw ModelError("compactor produced an illegal plan");
  const auto ledger = ledger_for(config_potential(cfg), config_potential(*end),
                                 static_cast<std::int64_t>(plan.moves.size()),
                                 opts.enforce_safety ? opts.safety : std::numeric_limits<double>::infinity());
  log(LogLevel::trace, to_string(plan.label), ": ", plan.moves.size(), " moves, potential ", ledger.pi_start,
      " -> ", ledger.pi_end);
  cfg = std::move(*end);
  r.total_moves += ledger.moves;
  r.max_safety = std::max(r.max_safety, ledger.safety_factor());
  ++r.label_counts[plan.label];
  r.plans.push_back({std::move(plan), ledger});
}

}  // namespace detail

// Planar operations only, on the floor layer. The origin cube never moves.
inline std::vector<AppliedPlan> run_planar_phase(Configuration& cfg, LemmaStats* stats = nullptr,
                                                 const CompactorOptions& opts = {}) {
  CompactionResult r;
  const bool had_origin = cfg.contains({0, 0, 0});
  while (!is_finished(cfg)) {
    auto p = step_in_frame(kPlanarFrame.to_logical(cfg), kPlanarFrame, stats);
    if (!p) break;
    detail::apply_plan(r, cfg, to_real(*p, kPlanarFrame), opts);
    if (had_origin && !cfg.contains({0, 0, 0})) throw ModelError("planar phase moved the origin cube");
  }
  return std::move(r.plans);
}

inline CompactionResult run_compaction(const Configuration& start, const CompactorOptions& opts = {}) {
  validate_configuration(start);
  CompactionResult r;
  r.initial = start;
  Configuration cfg = start;
  while (auto p = step(cfg, &r.lemmas, opts)) detail::apply_plan(r, cfg, std::move(*p), opts);
  r.final_config = std::move(cfg);
  return r;
}

}  // namespace slidecube
