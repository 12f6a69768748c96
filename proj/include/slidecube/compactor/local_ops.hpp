#pragma once

#include <optional>
#include <vector>

#include "shove.hpp"

namespace slidecube {

namespace detail {

inline std::int64_t z_sum(const Configuration& cfg) {
  std::int64_t s = 0;
  for (Cell c : cfg) s += c.z;
  return s;
}

inline std::vector<Subpillar> domain_non_cut_pillars(const Configuration& cfg, const Frame& frame) {
  std::vector<Subpillar> out;
  for (const Subpillar& p : non_cut_pillars(cfg))
    if (frame.in_domain(p.base())) out.push_back(p);
  return out;
}

// Best potential-reducing single move among cubes accepted by `mover`.
// Ranking: largest logical potential decrease, then smallest destination in
// (z, y, x) order.
template <typename MoverPred>
std::optional<Move> best_greedy_move(const Configuration& cfg, const Frame& frame, MoverPred&& mover) {
  const CellSet cuts = cut_cubes(cfg);
  auto occupied = [&cfg](Cell c) { return cfg.contains(c); };
  std::optional<Move> best;
  Potential best_gain = 0;
  for (Cell c : cfg.sorted()) {
    if (!mover(c) || cuts.count(c)) continue;
    for (const Move& m : witnessed_moves_of(c, occupied)) {
      if (!is_nonnegative(m.to) || !frame.in_domain(m.to)) continue;
      const Potential real_delta = cube_potential(frame.to_real(m.to)) - cube_potential(frame.to_real(m.from));
      if (real_delta >= 0) continue;
      const Potential gain = cube_potential(m.from) - cube_potential(m.to);
      if (!best || gain > best_gain || (gain == best_gain && zyx_less(m.to, best->to))) {
        best = m;
        best_gain = gain;
      }
    }
  }
  return best;
}


inline constexpr int kMaxTopUp = 4;

// Accepts a move sequence that lowers the logical height sum and ends
// nonnegative. When the real potential has not dropped yet (an unlocking
// slide can cancel the gain), up to kMaxTopUp greedy moves are appended.
inline std::optional<std::vector<Move>> settle(const Configuration& cfg, const Frame& frame,
                                               std::vector<Move> moves) {
  if (moves.empty()) return std::nullopt;
  auto end = replay(cfg, moves);
  if (!end || !all_nonnegative(*end) || z_sum(*end) >= z_sum(cfg)) return std::nullopt;
  const Potential start = frame.real_potential(cfg);
  for (int extra = 0; frame.real_potential(*end) >= start; ++extra) {
    if (extra == kMaxTopUp) return std::nullopt;
    auto m = best_greedy_move(*end, frame, [&](Cell c) { return c.z > 0 && frame.in_domain(c); });
    if (!m) return std::nullopt;
    apply_move_in_place(*end, *m);
    moves.push_back(*m);
  }
  return moves;
}

// Tries `moves`, then the same moves with an unlocking head slide inserted
// before each position, when p is locked. Unlocking slides the head sideways
// onto a cube next to the top of its support.
inline std::optional<std::vector<Move>> with_unlock(const Configuration& cfg, const Frame& frame,
                                                    const Subpillar& p, const std::vector<Move>& moves,
                                                    std::optional<Side> preferred) {
  if (auto ok = settle(cfg, frame, moves)) return ok;
  if (!is_locked(cfg, p)) return std::nullopt;
  std::vector<Side> order;
  if (preferred) order.push_back(*preferred);
  for (Side s : frame.sides())
    if (!preferred || s != *preferred) order.push_back(s);
  for (std::size_t pos = moves.size(); pos-- > 0;) {
    for (Side s : order) {
      const Cell to = side_cell(p, s, p.z_top);
      if (cfg.contains(to) || !cfg.contains(side_cell(p, s, p.z_top - 1))) continue;
      std::vector<Move> candidate = moves;
      candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(pos), slide(p.head(), to));
      if (auto ok = settle(cfg, frame, candidate)) return ok;
    }
  }
  return std::nullopt;
}

inline bool has_outside_neighbor(const Configuration& cfg, const Subpillar& whole, int z_lo, int z_hi) {
  for (int z = z_lo; z <= z_hi; ++z) {
    for (Cell d : kFaceDirections) {
      Cell n = whole.at(z) + d;
      if (!whole.contains(n) && cfg.contains(n)) return true;
    }
  }
  return false;
}

}  // namespace detail

enum class LocalCase { A, B, C, D };

// One candidate of operations (a)-(d) on non-cut pillar p against adjacent pillar q.
inline std::optional<std::vector<Move>> local_case_moves(const Configuration& cfg, const Frame& frame,
                                                         LocalCase which, const Subpillar& p, Side side,
                                                         const std::vector<Subpillar>& adjacent,
                                                         const Subpillar& q) {
  const int zb = p.z_bottom, zt = p.z_top;
  const Cell below = p.at(zb - 1);
  switch (which) {
    case LocalCase::A: {
      if (q != adjacent.back() || q.z_top > zt - 2 || p.height() < 2) return std::nullopt;
      return detail::with_unlock(cfg, frame, p, {convex(p.head(), side_cell(p, side, zt - 1))}, side);
    }
    case LocalCase::B: {
      if (q.z_bottom <= zb || q.z_bottom > zt) return std::nullopt;
      const bool free_cube =
          q.z_bottom == zb + 1 || detail::has_outside_neighbor(cfg, p, zb, q.z_bottom - 2);
      if (!free_cube) return std::nullopt;
      std::vector<Move> moves{slide(p.at(q.z_bottom - 1), side_cell(p, side, q.z_bottom - 1)),
                              slide(p.at(q.z_bottom), p.at(q.z_bottom - 1))};
      return detail::with_unlock(cfg, frame, p, moves, side);
    }
    case LocalCase::C: {
      if (cfg.contains(below) || q.z_bottom >= zb || zb == 0) return std::nullopt;
      return detail::with_unlock(cfg, frame, p, {slide(p.base(), below)}, side);
    }
    case LocalCase::D: {
      if (cfg.contains(below) || q != adjacent.front() || q.z_bottom != zb || zb == 0) return std::nullopt;
      return detail::with_unlock(cfg, frame, p, {convex(p.base(), side_cell(p, side, zb - 1))}, side);
    }
  }
  return std::nullopt;
}

// Operations (a)-(d), scanned case by case, pillars in (x, y, z_bottom) order,
// sides in the frame's order. Moves are in the frame's logical coordinates.
inline std::optional<Plan> find_local_z_reduction(const Configuration& cfg, const Frame& frame,
                                                  LemmaStats* stats = nullptr) {
  const auto pillars = detail::domain_non_cut_pillars(cfg, frame);
  const auto z_before = detail::z_sum(cfg);
  constexpr std::array<std::pair<LocalCase, OpLabel>, 4> kCases{
      {{LocalCase::A, OpLabel::A}, {LocalCase::B, OpLabel::B}, {LocalCase::C, OpLabel::C}, {LocalCase::D, OpLabel::D}}};
  for (auto [which, label] : kCases) {
    for (const Subpillar& p : pillars) {
      for (Side side : frame.sides()) {
        const auto adjacent = adjacent_pillars(cfg, p, side);
        for (const Subpillar& q : adjacent) {
          auto moves = local_case_moves(cfg, frame, which, p, side, adjacent, q);
          if (!moves) continue;
          auto end = replay(cfg, *moves);
          if (!end || detail::z_sum(*end) >= z_before) continue;
          return Plan{framed(label, frame), std::move(*moves), p, std::nullopt};
        }
      }
    }
  }
  if (stats) {
    for (const Subpillar& p : pillars) {
      bool ok = true;
      for (Side side : frame.sides()) {
        const auto adjacent = adjacent_pillars(cfg, p, side);
        if (adjacent.size() > 1) ok = false;
        for (const Subpillar& q : adjacent) {
          if (p.z_top > q.z_top + 1) ok = false;
          if (!(p.z_bottom < q.z_bottom || (p.z_bottom == 0 && q.z_bottom == 0))) ok = false;
        }
      }
      if (!ok) ++stats->at_most_one_adjacent;
    }
  }
  return std::nullopt;
}

// Operation (e): shove the subpillar below the lowest higher-starting neighbor.
inline std::optional<Plan> find_shove_e(const Configuration& cfg, const Frame& frame,
                                        LemmaStats* stats = nullptr) {
  const auto pillars = detail::domain_non_cut_pillars(cfg, frame);
  for (const Subpillar& p : pillars) {
    bool crowded = false;
    std::optional<std::pair<Side, Subpillar>> lowest;
    for (Side side : frame.sides()) {
      const auto adjacent = adjacent_pillars(cfg, p, side);
      if (adjacent.size() > 1) crowded = true;
      for (const Subpillar& q : adjacent)
        if (q.z_bottom > p.z_bottom && (!lowest || q.z_bottom < lowest->second.z_bottom))
          lowest = std::pair{side, q};
    }
    if (crowded || !lowest) continue;
    const Side side = lowest->first;
    const Subpillar sub{p.x, p.y, p.z_bottom, lowest->second.z_bottom};
    for (Side second : frame.sides()) {
      if (second == side || cfg.contains(side_cell(p, second, p.z_bottom))) continue;
      // Plain shove first; when the pillar's head would be stranded, unlock it first.
      std::vector<std::vector<Move>> prefixes{{}};
      if (sub.z_top < p.z_top && is_locked(cfg, p)) {
        for (Side s : frame.sides()) {
          const Cell to = side_cell(p, s, p.z_top);
          if (!cfg.contains(to) && cfg.contains(side_cell(p, s, p.z_top - 1)))
            prefixes.push_back({slide(p.head(), to)});
        }
      }
      for (const auto& prefix : prefixes) {
        auto start = replay(cfg, prefix);
        if (!start) continue;
        try {
          auto moves = plan_pillar_shove(*start, sub, side, second);
          std::vector<Move> all = prefix;
          all.insert(all.end(), moves.begin(), moves.end());
          if (auto ok = detail::settle(cfg, frame, all)) return Plan{framed(OpLabel::E, frame), std::move(*ok), sub, std::nullopt};
        } catch (const ShoveError&) {
        }
      }
      break;
    }
  }
  if (stats) {
    for (const Subpillar& p : pillars) {
      for (Side side : frame.sides()) {
        bool bad = false;
        for (const Subpillar& q : adjacent_pillars(cfg, p, side))
          if (q.z_bottom > p.z_bottom) bad = true;
        if (bad) {
          ++stats->no_higher_neighbor;
          break;
        }
      }
    }
  }
  return std::nullopt;
}


// Operation (f): one potential-reducing move of a cube above the floor.
inline std::optional<Move> find_greedy_high(const Configuration& cfg, const Frame& frame,
                                            LemmaStats* stats = nullptr) {
  auto best = detail::best_greedy_move(cfg, frame, [&](Cell c) { return c.z > 0 && frame.in_domain(c); });
  if (!best && stats) {
    for (const auto& comp : components_if(cfg, [&](Cell c) { return c.z > 0 && frame.in_domain(c); })) {
      if (decompose_pillars(comp).size() != 1) continue;
      const bool ok = comp.size() == 1 && comp.front() == Cell{0, 0, 1} && cfg.contains({0, 0, 0});
      if (!ok) ++stats->single_pillar_component;
    }
  }
  return best;
}

inline std::optional<Plan> find_local_z_reduction(const Configuration& cfg) {
  return find_local_z_reduction(cfg, kSpatialFrame);
}
inline std::optional<Plan> find_shove_e(const Configuration& cfg) { return find_shove_e(cfg, kSpatialFrame); }
inline std::optional<Move> find_greedy_high(const Configuration& cfg) {
  return find_greedy_high(cfg, kSpatialFrame);
}

}  // namespace slidecube
