#pragma once

#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "configuration.hpp"

namespace slidecube {

enum class MoveKind { Slide, ConvexTransition };

struct Move {
  MoveKind kind{MoveKind::Slide};
  Cell from;
  Cell to;

  friend bool operator==(const Move&, const Move&) = default;
  friend bool operator<(const Move& a, const Move& b) {
    return std::tie(a.from, a.to, a.kind) < std::tie(b.from, b.to, b.kind);
  }
};

inline Move slide(Cell from, Cell to) { return {MoveKind::Slide, from, to}; }
inline Move convex(Cell from, Cell to) { return {MoveKind::ConvexTransition, from, to}; }

inline std::ostream& operator<<(std::ostream& os, const Move& m) {
  return os << (m.kind == MoveKind::Slide ? "slide " : "convex ") << m.from << "->" << m.to;
}

enum class MoveVerdict { Ok, SourceEmpty, DestinationOccupied, NoWitnessCycle, Disconnects };

inline std::string_view to_string(MoveVerdict v) {
  switch (v) {
    case MoveVerdict::Ok: return "Ok";
    case MoveVerdict::SourceEmpty: return "SourceEmpty";
    case MoveVerdict::DestinationOccupied: return "DestinationOccupied";
    case MoveVerdict::NoWitnessCycle: return "NoWitnessCycle";
    case MoveVerdict::Disconnects: return "Disconnects";
  }
  return "?";
}

class IllegalMove : public ModelError {
 public:
  IllegalMove(const Move& m, MoveVerdict v)
      : ModelError("illegal move: " + std::string(to_string(v))), move(m), verdict(v) {}
  Move move;
  MoveVerdict verdict;
};

// Occupancy part of the legality rule: is there a 4-cycle through from/to
// whose occupancy matches the move kind? Connectivity is not checked here.
template <typename Occupied>
bool has_witness_cycle(const Move& mv, Occupied&& occupied) {
  const Cell delta = mv.to - mv.from;
  if (mv.kind == MoveKind::Slide) {
    if (l1_norm(delta) != 1) return false;
    for (Cell p : kFaceDirections) {
      if (p == delta || p == -delta) continue;
      if (occupied(mv.from + p) && occupied(mv.to + p)) return true;
    }
    return false;
  }
  int nonzero = 0;
  for (int a = 0; a < 3; ++a) {
    if (delta[a] == 0) continue;
    if (delta[a] != 1 && delta[a] != -1) return false;
    ++nonzero;
  }
  if (nonzero != 2) return false;
  Cell first{}, second{};
  bool have_first = false;
  for (int a = 0; a < 3; ++a) {
    if (delta[a] == 0) continue;
    (have_first ? second : first) = unit(a, delta[a]);
    have_first = true;
  }
  // The pivot is adjacent to both from and to; the opposite corner stays empty.
  const bool a_occ = occupied(mv.from + first);
  const bool b_occ = occupied(mv.from + second);
  return a_occ != b_occ;
}

inline MoveVerdict check_move(const Configuration& cfg, const Move& mv) {
  if (!cfg.contains(mv.from)) return MoveVerdict::SourceEmpty;
  if (cfg.contains(mv.to)) return MoveVerdict::DestinationOccupied;
  if (!has_witness_cycle(mv, [&cfg](Cell c) { return cfg.contains(c); }))
    return MoveVerdict::NoWitnessCycle;
  if (!is_connected_without(cfg, mv.from)) return MoveVerdict::Disconnects;
  return MoveVerdict::Ok;
}

// In-place variant; throws IllegalMove and leaves cfg untouched on failure.
inline void apply_move_in_place(Configuration& cfg, const Move& mv) {
  if (auto v = check_move(cfg, mv); v != MoveVerdict::Ok) throw IllegalMove(mv, v);
  cfg.erase(mv.from);
  cfg.insert(mv.to);
}

inline Configuration apply_move(Configuration cfg, const Move& mv) {
  apply_move_in_place(cfg, mv);
  return cfg;
}

// Destinations reachable by one move from `c`, ignoring connectivity.
template <typename Occupied>
std::vector<Move> witnessed_moves_of(Cell c, Occupied&& occupied) {
  std::vector<Move> out;
  for (Cell d : kFaceDirections) {
    Move m = slide(c, c + d);
    if (!occupied(m.to) && has_witness_cycle(m, occupied)) out.push_back(m);
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      for (int sa : {-1, 1}) {
        for (int sb : {-1, 1}) {
          Move m = convex(c, c + unit(a, sa) + unit(b, sb));
          if (!occupied(m.to) && has_witness_cycle(m, occupied)) out.push_back(m);
        }
      }
    }
  }
  return out;
}

// Every legal move, sorted by (from, to, kind).
inline std::vector<Move> legal_moves(const Configuration& cfg) {
  const bool connected = is_connected(cfg);
  const CellSet cuts = connected ? cut_cubes(cfg) : CellSet{};
  std::vector<Move> out;
  auto occupied = [&cfg](Cell c) { return cfg.contains(c); };
  for (Cell c : cfg) {
    if (connected ? cuts.count(c) != 0 : !is_connected_without(cfg, c)) continue;
    for (const Move& m : witnessed_moves_of(c, occupied)) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_finished_cube(const Configuration& cfg, Cell c) {
  if (!cfg.contains(c)) throw ModelError("is_finished_cube: cell is not a cube");
  if (!is_nonnegative(c)) return false;
  for (int x = 0; x <= c.x; ++x)
    for (int y = 0; y <= c.y; ++y)
      for (int z = 0; z <= c.z; ++z)
        if (!cfg.contains({x, y, z})) return false;
  return true;
}

// A configuration is finished iff it is a nonnegative down-closed set, which
// is equivalent to every cube's spanning cuboid being present.
inline bool is_finished(const Configuration& cfg) {
  for (Cell c : cfg) {
    if (!is_nonnegative(c)) return false;
    if (c.x > 0 && !cfg.contains(c - unit(0))) return false;
    if (c.y > 0 && !cfg.contains(c - unit(1))) return false;
    if (c.z > 0 && !cfg.contains(c - unit(2))) return false;
  }
  return true;
}

}  // namespace slidecube
