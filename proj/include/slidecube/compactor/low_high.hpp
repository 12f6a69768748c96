#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "../log.hpp"
#include "local_ops.hpp"

namespace slidecube {

class LemmaViolated : public ModelError {
 public:
  using ModelError::ModelError;
};

class PreconditionViolated : public ModelError {
 public:
  using ModelError::ModelError;
};

class NoPath : public ModelError {
 public:
  using ModelError::ModelError;
};

// Components of the floor layer (low) and of the cubes above it (high),
// contracted to vertices. Vertex ids: low components first, then high ones.
struct LowHighGraph {
  std::vector<std::vector<Cell>> low;
  std::vector<std::vector<Cell>> high;
  std::vector<std::vector<int>> adjacency;
  std::unordered_map<Cell, int, CellHash> vertex_of;
  int root{-1};
  std::vector<int> dist;
  int d{0};
  std::vector<int> locally_furthest;

  std::size_t vertex_count() const { return low.size() + high.size(); }
  bool is_low(int v) const { return v < static_cast<int>(low.size()); }
  const std::vector<Cell>& cells(int v) const {
    return is_low(v) ? low[v] : high[v - static_cast<int>(low.size())];
  }
};

inline LowHighGraph build_low_high_graph(const Configuration& cfg, const Frame& frame,
                                         LemmaStats* stats = nullptr) {
  LowHighGraph g;
  g.low = components_if(cfg, [&](Cell c) { return c.z == 0 && frame.in_domain(c); });
  g.high = components_if(cfg, [&](Cell c) { return c.z > 0 && frame.in_domain(c); });
  const int n = static_cast<int>(g.vertex_count());
  for (int v = 0; v < n; ++v)
    for (Cell c : g.cells(v)) g.vertex_of.emplace(c, v);

  g.adjacency.assign(n, {});
  for (int v = 0; v < static_cast<int>(g.low.size()); ++v) {
    for (Cell c : g.low[v]) {
      auto it = g.vertex_of.find(c + unit(2));
      if (it != g.vertex_of.end()) g.adjacency[v].push_back(it->second);
    }
  }
  for (int v = 0; v < n; ++v) {
    auto& adj = g.adjacency[v];
    if (!g.is_low(v)) continue;
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    for (int h : adj) g.adjacency[h].push_back(v);
  }
  for (int v = 0; v < n; ++v) std::sort(g.adjacency[v].begin(), g.adjacency[v].end());

  if (g.low.empty()) return g;
  if (auto it = g.vertex_of.find(Cell{0, 0, 0}); it != g.vertex_of.end()) {
    g.root = it->second;
  } else {
    // Components are sorted, so the first low one holds the smallest floor cube.
    g.root = 0;
  }

  g.dist.assign(n, -1);
  g.dist[g.root] = 0;
  std::deque<int> queue{g.root};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    g.d = std::max(g.d, g.dist[v]);
    for (int w : g.adjacency[v]) {
      if (g.dist[w] >= 0) continue;
      g.dist[w] = g.dist[v] + 1;
      queue.push_back(w);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (g.dist[v] < 0) continue;
    bool furthest = true;
    for (int w : g.adjacency[v])
      if (g.dist[w] >= g.dist[v]) furthest = false;
    if (furthest) g.locally_furthest.push_back(v);
  }

  if (stats) {
    int high_in_u = 0;
    for (int v : g.locally_furthest) {
      if (g.is_low(v)) continue;
      ++high_in_u;
      bool grounded = true;
      for (Cell c : g.cells(v))
        if (!is_finished_cube(cfg, c)) grounded = false;
      if (!grounded) ++stats->removable_high_grounded;
    }
    if (high_in_u > 1) ++stats->u_high_unique;
  }
  return g;
}

enum class NStatus { AllPresent, AllAbsent, Mixed };

struct ClearComponent {
  int component{-1};
  std::vector<Cell> cells;
  Subpillar clearing_pillar;
  std::vector<Cell> n_cells;
  NStatus n_status{NStatus::AllAbsent};
};

namespace detail {

inline Configuration without(const Configuration& cfg, const std::vector<Cell>& cells) {
  Configuration out = cfg;
  for (Cell c : cells) out.erase(c);
  return out;
}

inline Subpillar pillar_through(const Configuration& cfg, Cell c) {
  int lo = c.z, hi = c.z;
  while (cfg.contains({c.x, c.y, lo - 1})) --lo;
  while (cfg.contains({c.x, c.y, hi + 1})) ++hi;
  return {c.x, c.y, lo, hi};
}

inline bool touches(const std::vector<Cell>& component, const Subpillar& p) {
  for (Cell c : component)
    for (Cell d : kFaceDirections)
      if (p.contains(c + d)) return true;
  return false;
}

inline ClearComponent make_clear(const Configuration& cfg, const Frame& frame, const LowHighGraph& g,
                                 int l, const Subpillar& p) {
  ClearComponent cc{l, g.low[l], p, {}, NStatus::AllAbsent};
  const BoundingBox box = bounding_box(cfg);
  for (Side s : frame.sides()) {
    Cell n = side_cell(p, s, 1);
    if (box.contains(n)) cc.n_cells.push_back(n);
  }
  std::size_t present = 0;
  for (Cell n : cc.n_cells) present += cfg.contains(n) ? 1 : 0;
  if (present == cc.n_cells.size() && present > 0) cc.n_status = NStatus::AllPresent;
  else if (present == 0) cc.n_status = NStatus::AllAbsent;
  else cc.n_status = NStatus::Mixed;
  return cc;
}

inline bool is_clearing(const Configuration& cfg, const std::vector<Cell>& l, const Subpillar& p) {
  const Configuration rest = without(cfg, l);
  return is_connected(rest) && is_pillar_of(rest, p) && is_non_cut_pillar(rest, p) && touches(l, p);
}

}  // namespace detail

// Clear low component via the farthest-cube construction; falls back to a
// scan of all low components when the construction does not deliver.
inline std::optional<ClearComponent> find_clear_component(const Configuration& cfg, const Frame& frame,
                                                          const LowHighGraph& g,
                                                          LemmaStats* stats = nullptr) {
  if (g.d < 2 || g.root < 0) return std::nullopt;
  const int n_low = static_cast<int>(g.low.size());

  int far = -1;
  for (int v = 0; v < n_low; ++v)
    if (g.dist[v] >= 0 && (far < 0 || g.dist[v] > g.dist[far])) far = v;
  std::optional<ClearComponent> found;
  if (far >= 0 && far != g.root && !g.adjacency[far].empty()) {
    const int h = g.adjacency[far].front();
    std::vector<int> l_h;
    for (int v : g.locally_furthest)
      if (g.is_low(v) && std::binary_search(g.adjacency[h].begin(), g.adjacency[h].end(), v)) l_h.push_back(v);

    Configuration reduced = cfg;
    CellSet in_l_h;
    for (int v : l_h)
      for (Cell c : g.low[v]) {
        reduced.erase(c);
        in_l_h.insert(c);
      }
    const Cell c_s = g.low[g.root].front();
    std::unordered_map<Cell, int, CellHash> dist{{c_s, 0}};
    std::deque<Cell> queue{c_s};
    while (!queue.empty()) {
      Cell c = queue.front();
      queue.pop_front();
      for (Cell d : kFaceDirections) {
        Cell n = c + d;
        if (!reduced.contains(n) || dist.count(n)) continue;
        dist.emplace(n, dist[c] + 1);
        queue.push_back(n);
      }
    }
    std::optional<Cell> farthest;
    for (Cell c : g.cells(h)) {
      if (!in_l_h.count(c - unit(2)) || !dist.count(c)) continue;
      if (!farthest || dist[c] > dist[*farthest]) farthest = c;
    }
    if (farthest) {
      const Subpillar p = detail::pillar_through(reduced, *farthest);
      for (int l : l_h) {
        if (detail::is_clearing(cfg, g.low[l], p)) {
          found = detail::make_clear(cfg, frame, g, l, p);
          break;
        }
      }
    }
    if (!found && stats) ++stats->clear_component;
  }
  if (found) return found;

  for (int l = 0; l < n_low; ++l) {
    if (l == g.root) continue;
    const Configuration rest = detail::without(cfg, g.low[l]);
    if (!is_connected(rest)) continue;
    for (const Subpillar& p : non_cut_pillars(rest)) {
      if (frame.in_domain(p.base()) && p.z_bottom == 1 && detail::touches(g.low[l], p))
        return detail::make_clear(cfg, frame, g, l, p);
    }
  }
  return std::nullopt;
}

enum class LowPurpose { None, Merge, JoinRoot, ReachOrigin };

inline std::string_view to_string(LowPurpose p) {
  switch (p) {
    case LowPurpose::None: return "none";
    case LowPurpose::Merge: return "merge";
    case LowPurpose::JoinRoot: return "join-root";
    case LowPurpose::ReachOrigin: return "reach-origin";
  }
  return "?";
}

// Operation (g): one potential-reducing move of a cube of the low component.
inline std::optional<Move> find_greedy_low(const Configuration& cfg, const Frame& frame,
                                           const std::vector<Cell>& component) {
  CellSet in_l(component.begin(), component.end());
  return detail::best_greedy_move(cfg, frame, [&](Cell c) { return in_l.count(c) > 0; });
}

// What a greedy-low move did to its component.
inline LowPurpose classify_low_move(const Configuration& before, const LowHighGraph& g, int component,
                                    const Move& m) {
  if (m.to == Cell{0, 0, 0}) return LowPurpose::ReachOrigin;
  if (m.to.z != 0) return LowPurpose::None;
  for (Cell d : kFaceDirections) {
    Cell n = m.to + d;
    if (n.z != 0 || !before.contains(n) || n == m.from) continue;
    auto it = g.vertex_of.find(n);
    if (it == g.vertex_of.end() || it->second == component) continue;
    return it->second == g.root ? LowPurpose::JoinRoot : LowPurpose::Merge;
  }
  return LowPurpose::None;
}

// Operation (h): walk the cube under the clearing pillar beneath the floor
// to an empty floor cell of lower potential.
inline Plan plan_floor_walk(const Configuration& cfg, const Frame& frame, const ClearComponent& cc) {
  if (cc.n_status != NStatus::AllPresent) throw PreconditionViolated("floor walk: N cells not all present");
  const Subpillar& p = cc.clearing_pillar;
  const Cell start{p.x, p.y, 0};
  if (!cfg.contains(start)) throw PreconditionViolated("floor walk: no cube below the clearing pillar");
  const BoundingBox box = bounding_box(cfg);
  const Potential pi_start = cube_potential(frame.to_real(start));

  std::vector<Cell> spots;
  for (int y = box.min.y; y <= box.max.y; ++y)
    for (int x = box.min.x; x <= box.max.x; ++x) {
      Cell e{x, y, 0};
      if (cfg.contains(e) || !frame.in_domain(e) || !is_nonnegative(e)) continue;
      if (!(x < p.x || y < p.y) || cube_potential(frame.to_real(e)) >= pi_start) continue;
      spots.push_back(e);
    }
  std::sort(spots.begin(), spots.end(), [](Cell a, Cell b) { return std::pair{a.y, a.x} > std::pair{b.y, b.x}; });

  auto underside = [&](Cell c) {
    if (c.z == -1) {
      Cell above = c + unit(2);
      return above != start && cfg.contains(above) && frame.in_domain(c);
    }
    return false;
  };
  for (Cell e : spots) {
    auto allowed = [&](Cell c) { return c == e || underside(c); };
    auto path = route_cube(cfg, start, [e](Cell c) { return c == e; }, allowed);
    if (path && accept_plan(frame, cfg, *path)) return Plan{framed(OpLabel::H, frame), *path, p, cc.component};
  }
  throw NoPath("floor walk: no underside path to a lower empty spot");
}

namespace detail {

inline constexpr std::size_t kGatherSearchCap = 60000;
inline constexpr std::size_t kGatherHelpersTried = 6;

inline std::vector<Move> concat(std::vector<Move> a, const std::vector<Move>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

// Operation (i): borrow a helper cube from the low component, shove the
// clearing pillar down onto its lowest anchored side, then send the spare
// cube back to where the helper came from.
inline Plan plan_gather_shove(const Configuration& cfg, const Frame& frame, const ClearComponent& cc) {
  if (cc.n_status != NStatus::AllAbsent) throw PreconditionViolated("gather: N cells not all absent");
  const Subpillar& p = cc.clearing_pillar;
  if (p.z_bottom != 1) throw PreconditionViolated("gather: clearing pillar does not start at z = 1");

  std::optional<int> zt;
  std::optional<Side> side;
  for (int z = 2; z <= p.z_top && !zt; ++z) {
    for (Side s : frame.sides()) {
      if (cfg.contains(side_cell(p, s, z)) && (!side || s < *side)) {
        zt = z;
        side = s;
      }
    }
  }
  const auto label = framed(OpLabel::I, frame);
  const auto allowed = near_box(cfg, 2);

  if (zt) {
    const Subpillar sub{p.x, p.y, 1, *zt};
    const Configuration target = shove_result(cfg, sub, *side);
    std::vector<Cell> helpers;
    for (Cell c : cc.cells)
      if (c != Cell{p.x, p.y, 0} && is_connected_without(cfg, c)) helpers.push_back(c);
    std::sort(helpers.begin(), helpers.end(), [](Cell a, Cell b) { return zyx_less(b, a); });
    if (helpers.size() > detail::kGatherHelpersTried) helpers.resize(detail::kGatherHelpersTried);

    for (Cell h : helpers) {
      auto gather = route_cube_to(cfg, h, side_cell(p, *side, *zt - 1), allowed);
      if (!gather) continue;
      auto mid = replay(cfg, *gather);
      if (!mid) continue;
      for (Side q : detail::perpendicular_sides(*side, std::nullopt)) {
        const Side corner{side->first + q.first, side->second + q.second};
        if (!is_nonnegative(side_cell(p, corner, 0))) continue;
        std::vector<Move> walk;
        for (int k = *zt; k >= 3; --k) {
          walk.push_back(convex(p.at(k), side_cell(p, corner, k)));
          walk.push_back(slide(side_cell(p, corner, k), side_cell(p, corner, k - 1)));
          walk.push_back(convex(side_cell(p, corner, k - 1), side_cell(p, *side, k - 2)));
        }
        auto walked = replay(*mid, walk);
        if (!walked) continue;
        auto back = route_cube_to(*walked, p.at(2), h, allowed);
        if (!back) continue;
        auto moves = detail::concat(detail::concat(*gather, walk), *back);
        auto end = accept_plan(frame, cfg, moves);
        if (end && *end == target) return Plan{label, std::move(moves), p, cc.component};
      }
    }

    const Cell base{p.x, p.y, 0};
    std::vector<Cell> near;
    for (Cell c : cc.cells)
      if (c != base && l1_norm(c - base) <= 3) near.push_back(c);
    std::sort(near.begin(), near.end(), [&](Cell a, Cell b) {
      return l1_norm(a - base) < l1_norm(b - base) || (l1_norm(a - base) == l1_norm(b - base) && a < b);
    });
    auto box = [&](Cell c) {
      return frame.near_domain(c) && is_nonnegative(c) && std::abs(c.x - p.x) <= 2 && std::abs(c.y - p.y) <= 2 &&
             c.z <= *zt + 1;
    };
    CellSet movable;
    for (Cell c : sub.cells()) movable.insert(c);
    movable.insert(base);
    for (std::size_t i = 0; i < near.size() && i < 2; ++i) movable.insert(near[i]);
    auto found = local_search(cfg, movable, box, [&](const Configuration& s) { return s == target; },
                              detail::kGatherSearchCap);
    if (found && accept_plan(frame, cfg, *found)) return Plan{label, std::move(*found), p, cc.component};

    // Any cheaper nonnegative arrangement of the same cubes will do.
    for (std::size_t i = 2; i < near.size() && i < 3; ++i) movable.insert(near[i]);
    const Potential pi = frame.real_potential(cfg);
    found = local_search(cfg, movable, box,
                         [&](const Configuration& s) { return all_nonnegative(s) && frame.real_potential(s) < pi; },
                         detail::kGatherSearchCap);
    if (found && accept_plan(frame, cfg, *found)) return Plan{label, std::move(*found), p, cc.component};
  }
  throw NoPath("gather: no choreography for the clearing pillar");
}

// Height-1 clearing pillar with a cube beside it at z = 1 and an empty floor
// cell below that cube. A helper closes the cycle through the floor cell,
// then the pillar cube takes the helper's old place; the net effect is the
// shove of (x, y, 0..1) toward that side.
inline Plan plan_clearing_drop(const Configuration& cfg, const Frame& frame, const ClearComponent& cc) {
  const Subpillar& p = cc.clearing_pillar;
  if (p.z_bottom != 1 || p.height() != 1) throw PreconditionViolated("drop: clearing pillar is not a single cube at z = 1");
  const Cell top = p.at(1);
  const Subpillar column{p.x, p.y, 0, 1};
  const Potential pi = frame.real_potential(cfg);

  std::vector<std::pair<Potential, Side>> sides;
  for (Side s : frame.sides()) {
    const Cell floor = side_cell(p, s, 0);
    if (!cfg.contains(side_cell(p, s, 1)) || cfg.contains(floor) || !frame.in_domain(floor) || !is_nonnegative(floor))
      continue;
    sides.push_back({frame.real_potential(std::array{floor}), s});
  }
  std::sort(sides.begin(), sides.end());

  const auto box = near_box(cfg, 1);
  auto allowed = [&](Cell c) { return box(c) && frame.near_domain(c) && is_nonnegative(c); };
  const CellSet cuts = cut_cubes(cfg);
  std::vector<Cell> helpers;
  for (Cell c : cfg.sorted())
    if (c != top && !cuts.count(c) && frame.in_domain(c)) helpers.push_back(c);

  for (const auto& [unused, s] : sides) {
    const Cell floor = side_cell(p, s, 0);
    const Configuration target = shove_result(cfg, column, s);
    if (frame.real_potential(target) >= pi) continue;
    std::stable_sort(helpers.begin(), helpers.end(),
                     [&](Cell a, Cell b) { return l1_norm(a - floor) < l1_norm(b - floor); });
    std::size_t tried = 0;
    for (Cell h : helpers) {
      if (tried++ == detail::kGatherHelpersTried) break;
      auto gather = route_cube_to(cfg, h, floor, allowed);
      if (!gather) continue;
      auto mid = replay(cfg, *gather);
      if (!mid) continue;
      auto back = route_cube_to(*mid, top, h, allowed);
      if (!back) continue;
      auto moves = detail::concat(*gather, *back);
      auto end = accept_plan(frame, cfg, moves);
      if (end && *end == target) return Plan{framed(OpLabel::I, frame), std::move(moves), p, cc.component};
    }
  }
  throw NoPath("drop: no helper can close a cycle under the clearing pillar");
}

}  // namespace slidecube
