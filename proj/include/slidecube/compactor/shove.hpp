#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "router.hpp"

namespace slidecube {

class ShoveError : public ModelError {
 public:
  using ModelError::ModelError;
};

using Side = std::pair<int, int>;

inline Cell side_cell(const Subpillar& p, Side s, int z) { return {p.x + s.first, p.y + s.second, z}; }

// (C \ P) u {x'} x {y'} x {z_b..z_t - 1} u {(x, y, z_b)}. Pure set arithmetic.
inline Configuration shove_result(const Configuration& cfg, const Subpillar& p, Side side) {
  Configuration out = cfg;
  for (Cell c : p.cells()) out.erase(c);
  for (int z = p.z_bottom; z < p.z_top; ++z) out.insert(side_cell(p, side, z));
  out.insert(p.base());
  return out;
}

namespace detail {

// Linear-length shove for pillars of height >= 3. The base climbs the side
// face to sit under the anchor; then, top-down, each pillar cube steps onto
// the corner column between `side` and `q`, drops one level and tucks in two
// levels below where it started. The last cube left in the pillar drops onto
// the base cell.
inline std::vector<Move> corner_walk(const Subpillar& p, Side side, Side q) {
  const int b = p.z_bottom, t = p.z_top;
  const Side corner{side.first + q.first, side.second + q.second};
  std::vector<Move> moves;
  moves.push_back(convex(p.at(b), side_cell(p, side, b + 1)));
  for (int z = b + 1; z <= t - 2; ++z) moves.push_back(slide(side_cell(p, side, z), side_cell(p, side, z + 1)));
  for (int k = t; k >= b + 2; --k) {
    moves.push_back(convex(p.at(k), side_cell(p, corner, k)));
    moves.push_back(slide(side_cell(p, corner, k), side_cell(p, corner, k - 1)));
    moves.push_back(convex(side_cell(p, corner, k - 1), side_cell(p, side, k - 2)));
  }
  moves.push_back(slide(p.at(b + 1), p.at(b)));
  return moves;
}

inline std::vector<Side> perpendicular_sides(Side side, std::optional<Side> preferred) {
  std::vector<Side> out;
  const Side a{-side.second, side.first}, b{side.second, -side.first};
  if (preferred && (*preferred == a || *preferred == b)) out.push_back(*preferred);
  for (Side s : {a, b})
    if (out.empty() || out.front() != s) out.push_back(s);
  return out;
}

}  // namespace detail

inline constexpr std::size_t kShoveSearchCap = 20000;
inline constexpr int kShoveSearchMaxHeight = 6;

// Move sequence realizing shove_result(cfg, p, side). Throws ShoveError when
// the preconditions fail or no choreography fits the surroundings.
inline std::vector<Move> plan_pillar_shove(const Configuration& cfg, const Subpillar& p, Side side,
                                           std::optional<Side> second_side = std::nullopt) {
  if (!is_subpillar_of(cfg, p)) throw ShoveError("shove: subpillar not in configuration");
  if (!cfg.contains(side_cell(p, side, p.z_top))) throw ShoveError("shove: anchor cube missing");
  for (int z = p.z_bottom; z < p.z_top; ++z)
    if (cfg.contains(side_cell(p, side, z))) throw ShoveError("shove: side is not free");
  if (!is_non_cut(cfg, p.cells())) throw ShoveError("shove: subpillar is a cut set");
  if (second_side && p.height() >= 9) {
    for (int z = p.z_bottom; z < p.z_top; ++z)
      if (cfg.contains(side_cell(p, *second_side, z))) throw ShoveError("shove: second side is not free");
  }

  const Configuration target = shove_result(cfg, p, side);
  auto reaches_target = [&](const std::vector<Move>& moves) {
    auto end = replay(cfg, moves);
    return end && *end == target;
  };

  if (p.height() == 1) return {};
  if (p.height() == 2) {
    std::vector<Move> moves{slide(p.base(), side_cell(p, side, p.z_bottom)), slide(p.head(), p.base())};
    if (reaches_target(moves)) return moves;
  } else {
    for (Side q : detail::perpendicular_sides(side, second_side)) {
      if (!is_nonnegative(side_cell(p, {side.first + q.first, side.second + q.second}, 0))) continue;
      auto moves = detail::corner_walk(p, side, q);
      if (reaches_target(moves)) return moves;
    }
  }
  if (p.height() <= kShoveSearchMaxHeight) {
    CellSet movable;
    for (Cell c : p.cells()) movable.insert(c);
    auto allowed = [&p](Cell c) {
      return is_nonnegative(c) && std::abs(c.x - p.x) <= 1 && std::abs(c.y - p.y) <= 1 &&
             c.z >= p.z_bottom - 1 && c.z <= p.z_top + 1;
    };
    auto found = local_search(cfg, movable, allowed,
                              [&target](const Configuration& s) { return s == target; }, kShoveSearchCap);
    if (found && reaches_target(*found)) return *found;
  }
  throw ShoveError("shove: no legal choreography found");
}

}  // namespace slidecube
