#pragma once

// Definition-level ground truth. Shares no legality or connectivity code with
// the model: cubes live in a std::set and moves are judged square by square.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "moves.hpp"
#include "potential.hpp"

namespace slidecube::oracle {

using CubeSet = std::set<Cell>;

enum class Reason { None, SourceEmpty, DestinationOccupied, NoWitnessCycle, Disconnects };

inline std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::None: return "ok";
    case Reason::SourceEmpty: return "source-empty";
    case Reason::DestinationOccupied: return "destination-occupied";
    case Reason::NoWitnessCycle: return "no-witness-cycle";
    case Reason::Disconnects: return "disconnects";
  }
  return "?";
}

struct VerificationReport {
  bool ok{true};
  std::optional<std::size_t> failing_index;
  Reason reason{Reason::None};
  std::vector<std::int64_t> per_move_pi;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline CubeSet to_set(const Configuration& cfg) { return CubeSet(cfg.begin(), cfg.end()); }

// Depth-first search from any cube; true for the empty set.
inline bool connected(const CubeSet& cubes) {
  if (cubes.empty()) return true;
  CubeSet seen{*cubes.begin()};
  std::vector<Cell> stack{*cubes.begin()};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (int axis = 0; axis < 3; ++axis) {
      for (int sign : {-1, 1}) {
        Cell n = c;
        n[axis] += sign;
        if (cubes.count(n) && seen.insert(n).second) stack.push_back(n);
      }
    }
  }
  return seen.size() == cubes.size();
}

// The twelve unit squares through c, each as its four corners in cyclic order.
inline std::vector<std::array<Cell, 4>> squares_through(Cell c) {
  std::vector<std::array<Cell, 4>> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (int di : {-1, 0}) {
        for (int dj : {-1, 0}) {
          Cell base = c;
          base[i] += di;
          base[j] += dj;
          Cell a = base, b = base, d = base, e = base;
          b[i] += 1;
          d[i] += 1;
          d[j] += 1;
          e[j] += 1;
          out.push_back({a, b, d, e});
        }
      }
    }
  }
  return out;
}

// A slide runs along one edge of a square whose two other corners are cubes.
// A convex transition crosses a square diagonally; of the other two corners
// exactly one is a cube, and it is adjacent to the mover.
inline bool witnessed(const CubeSet& cubes, Cell from, Cell to, MoveKind kind) {
  for (const auto& sq : squares_through(from)) {
    int at_from = -1, at_to = -1;
    for (int k = 0; k < 4; ++k) {
      if (sq[k] == from) at_from = k;
      if (sq[k] == to) at_to = k;
    }
    if (at_to < 0) continue;
    const int gap = (at_to - at_from + 4) % 4;
    if (kind == MoveKind::Slide && gap != 2) {
      const Cell p = sq[(at_to + (gap == 1 ? 1 : 3)) % 4], q = sq[(at_from + (gap == 1 ? 3 : 1)) % 4];
      if (cubes.count(p) && cubes.count(q)) return true;
    }
    if (kind == MoveKind::ConvexTransition && gap == 2) {
      const Cell m1 = sq[(at_from + 1) % 4], m2 = sq[(at_from + 3) % 4];
      if ((cubes.count(m1) != 0) != (cubes.count(m2) != 0)) return true;
    }
  }
  return false;
}

inline Reason judge(const CubeSet& cubes, const Move& m) {
  if (!cubes.count(m.from)) return Reason::SourceEmpty;
  if (cubes.count(m.to)) return Reason::DestinationOccupied;
  if (!witnessed(cubes, m.from, m.to, m.kind)) return Reason::NoWitnessCycle;
  CubeSet rest = cubes;
  rest.erase(m.from);
  if (!connected(rest)) return Reason::Disconnects;
  return Reason::None;
}

inline bool nonnegative(const CubeSet& cubes) {
  return std::all_of(cubes.begin(), cubes.end(), [](Cell c) { return c.x >= 0 && c.y >= 0 && c.z >= 0; });
}

inline VerificationReport verify_trace_by_definition(const Configuration& start, const std::vector<Move>& moves) {
  VerificationReport report;
  CubeSet cubes = to_set(start);
  if (!connected(cubes)) {
    report.ok = false;
    report.failing_index = 0;
    report.reason = Reason::Disconnects;
    return report;
  }
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Reason r = judge(cubes, moves[i]);
    if (r != Reason::None) {
      report.ok = false;
      report.failing_index = i;
      report.reason = r;
      return report;
    }
    cubes.erase(moves[i].from);
    cubes.insert(moves[i].to);
    if (nonnegative(cubes)) report.per_move_pi.push_back(potential_of(cubes));
  }
  return report;
}

// Every legal move, by trying all 26 surrounding cells of every cube.
inline std::vector<Move> legal_moves(const Configuration& cfg) {
  const CubeSet cubes = to_set(cfg);
  std::vector<Move> out;
  for (Cell c : cubes) {
    CubeSet rest = cubes;
    rest.erase(c);
    const bool free = connected(rest);
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dz = -1; dz <= 1; ++dz) {
          const int nonzero = (dx != 0) + (dy != 0) + (dz != 0);
          if (nonzero == 0 || nonzero == 3) continue;
          const Cell to{c.x + dx, c.y + dy, c.z + dz};
          if (cubes.count(to) || !free) continue;
          const MoveKind kind = nonzero == 1 ? MoveKind::Slide : MoveKind::ConvexTransition;
          if (witnessed(cubes, c, to, kind)) out.push_back({kind, c, to});
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Redelmeier-style growth: every connected n-subset of the box is produced
// once, rooted at its smallest cell. Results come back sorted.
inline std::vector<Configuration> enumerate_connected(std::size_t n, const BoundingBox& box) {
  const Cell ext{box.max.x - box.min.x + 1, box.max.y - box.min.y + 1, box.max.z - box.min.z + 1};
  const int total = ext.x * ext.y * ext.z;
  auto cell_of = [&](int i) {
    return Cell{box.min.x + i / (ext.y * ext.z), box.min.y + (i / ext.z) % ext.y, box.min.z + i % ext.z};
  };
  auto index_of = [&](Cell c) {
    return ((c.x - box.min.x) * ext.y + (c.y - box.min.y)) * ext.z + (c.z - box.min.z);
  };
  std::vector<std::vector<Cell>> found;
  if (n == 0 || total <= 0) return {};

  std::vector<int> poly;
  std::vector<char> seen(total, 0);
  std::function<void(int, std::vector<int>)> grow = [&](int root, std::vector<int> untried) {
    while (!untried.empty()) {
      const int c = untried.back();
      untried.pop_back();
      poly.push_back(c);
      if (poly.size() == n) {
        std::vector<Cell> cells;
        for (int i : poly) cells.push_back(cell_of(i));
        std::sort(cells.begin(), cells.end());
        found.push_back(std::move(cells));
      } else {
        std::vector<int> added;
        std::vector<int> next = untried;
        const Cell cc = cell_of(c);
        for (int axis = 0; axis < 3; ++axis)
          for (int sign : {-1, 1}) {
            Cell nb = cc;
            nb[axis] += sign;
            if (!box.contains(nb)) continue;
            const int j = index_of(nb);
            if (j <= root || seen[j]) continue;
            seen[j] = 1;
            added.push_back(j);
            next.push_back(j);
          }
        grow(root, next);
        for (int j : added) seen[j] = 0;
      }
      poly.pop_back();
    }
  };
  for (int root = 0; root < total; ++root) {
    seen[root] = 1;
    grow(root, {root});
    seen[root] = 0;
  }
  std::sort(found.begin(), found.end());
  std::vector<Configuration> out;
  out.reserve(found.size());
  for (const auto& cells : found) out.emplace_back(std::span<const Cell>(cells));
  return out;
}

// All configurations reachable by legal moves that keep every cube in `box`.
inline std::set<std::vector<Cell>> bfs_reachable(const Configuration& start, const BoundingBox& box,
                                                 std::size_t cap) {
  std::vector<Cell> init = start.sorted();
  std::set<std::vector<Cell>> seen{init};
  std::deque<std::vector<Cell>> queue{init};
  while (!queue.empty()) {
    std::vector<Cell> cur = queue.front();
    queue.pop_front();
    const Configuration cfg{std::span<const Cell>(cur)};
    for (const Move& m : oracle::legal_moves(cfg)) {
      if (!box.contains(m.to)) continue;
      std::vector<Cell> next = cur;
      *std::find(next.begin(), next.end(), m.from) = m.to;
      std::sort(next.begin(), next.end());
      if (!seen.insert(next).second) continue;
      if (seen.size() > cap) throw CapExceeded("reachability search exceeded its state cap");
      queue.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace slidecube::oracle
