#pragma once

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "frame.hpp"

namespace slidecube {

using CellPredicate = std::function<bool(Cell)>;

// Cells within the configuration's bounding box grown by `margin`.
inline CellPredicate near_box(const Configuration& cfg, int margin = 1) {
  BoundingBox box = bounding_box(cfg);
  for (int a = 0; a < 3; ++a) {
    box.min[a] -= margin;
    box.max[a] += margin;
  }
  return [box](Cell c) { return box.contains(c); };
}

// Shortest legal path of a single cube while every other cube stays put.
// The rest must be connected; each witness cycle keeps the mover attached, so
// every intermediate state is connected too.
inline std::optional<std::vector<Move>> route_cube(const Configuration& cfg, Cell from,
                                                   const CellPredicate& goal,
                                                   const CellPredicate& allowed) {
  if (!cfg.contains(from) || !is_connected_without(cfg, from)) return std::nullopt;
  auto occupied = [&](Cell c) { return c != from && cfg.contains(c); };
  std::unordered_map<Cell, Move, CellHash> parent;
  std::deque<Cell> queue{from};
  parent.emplace(from, Move{});
  while (!queue.empty()) {
    Cell pos = queue.front();
    queue.pop_front();
    if (pos != from && goal(pos)) {
      std::vector<Move> path;
      for (Cell c = pos; c != from; c = parent.at(c).from) path.push_back(parent.at(c));
      return std::vector<Move>(path.rbegin(), path.rend());
    }
    for (const Move& m : witnessed_moves_of(pos, occupied)) {
      if (!allowed(m.to) || parent.count(m.to)) continue;
      parent.emplace(m.to, m);
      queue.push_back(m.to);
    }
  }
  return std::nullopt;
}

inline std::optional<std::vector<Move>> route_cube_to(const Configuration& cfg, Cell from, Cell target,
                                                      const CellPredicate& allowed) {
  return route_cube(cfg, from, [target](Cell c) { return c == target; }, allowed);
}

// Breadth-first search over whole configurations in which only the cubes that
// start in `movable` (and wherever they go) may move. Returns the shortest
// sequence reaching a state accepted by `goal`, or nullopt when the goal is
// unreachable within `cap` visited states.
inline std::optional<std::vector<Move>> local_search(
    const Configuration& start, const CellSet& movable, const CellPredicate& allowed,
    const std::function<bool(const Configuration&)>& goal, std::size_t cap) {
  using Key = std::vector<Cell>;
  Configuration fixed = start;
  for (Cell c : movable) fixed.erase(c);
  Key init(movable.begin(), movable.end());
  std::sort(init.begin(), init.end());

  std::map<Key, std::pair<Key, Move>> parent;
  parent.emplace(init, std::pair<Key, Move>{{}, Move{}});
  std::deque<Key> queue{init};
  while (!queue.empty()) {
    Key key = queue.front();
    queue.pop_front();
    Configuration cfg = fixed;
    for (Cell c : key) cfg.insert(c);
    if (key != init && goal(cfg)) {
      std::vector<Move> path;
      for (Key k = key; k != init;) {
        const auto& [prev, mv] = parent.at(k);
        path.push_back(mv);
        k = prev;
      }
      return std::vector<Move>(path.rbegin(), path.rend());
    }
    if (parent.size() >= cap) continue;
    const CellSet cuts = cut_cubes(cfg);
    auto occupied = [&cfg](Cell c) { return cfg.contains(c); };
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (cuts.count(key[i])) continue;
      for (const Move& m : witnessed_moves_of(key[i], occupied)) {
        if (!allowed(m.to)) continue;
        Key next = key;
        next[i] = m.to;
        std::sort(next.begin(), next.end());
        if (parent.count(next)) continue;
        parent.emplace(next, std::pair<Key, Move>{key, m});
        queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

}  // namespace slidecube
