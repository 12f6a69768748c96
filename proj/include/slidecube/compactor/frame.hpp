#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "../moves.hpp"
#include "../pillars.hpp"
#include "../potential.hpp"

namespace slidecube {

enum class OpLabel {
  A, B, C, D, E, F, G, H, I,
  Unlock,
  PlanarA, PlanarB, PlanarC, PlanarD, PlanarE, PlanarF, PlanarG, PlanarH, PlanarI,
  Route,
};

inline constexpr std::array<std::string_view, 20> kOpLabelNames{
    "A", "B", "C", "D", "E", "F", "G", "H", "I", "Unlock",
    "PlanarA", "PlanarB", "PlanarC", "PlanarD", "PlanarE", "PlanarF", "PlanarG", "PlanarH", "PlanarI",
    "Route"};

inline std::string_view to_string(OpLabel l) { return kOpLabelNames[static_cast<int>(l)]; }

inline std::optional<OpLabel> parse_op_label(std::string_view s) {
  for (std::size_t i = 0; i < kOpLabelNames.size(); ++i)
    if (kOpLabelNames[i] == s) return static_cast<OpLabel>(i);
  return std::nullopt;
}

struct Plan {
  OpLabel label{OpLabel::A};
  std::vector<Move> moves;
  std::optional<Subpillar> pillar;
  std::optional<int> component;
};

// Counts of runtime checks of the structural lemmas that failed. All of them
// are expected to stay at zero.
struct LemmaStats {
  long at_most_one_adjacent{0};    // after (a)-(d)
  long no_higher_neighbor{0};      // after (a)-(e)
  long single_pillar_component{0}; // after (f)
  long removable_high_grounded{0}; // removable high components rest on z = 0 and are finished
  long u_high_unique{0};           // U holds at most one high component
  long clear_component{0};         // constructive clearing pillar is non-cut
  long n_cells_uniform{0};         // N cells all present or all absent

  long total() const {
    return at_most_one_adjacent + no_higher_neighbor + single_pillar_component +
           removable_high_grounded + u_high_unique + clear_component + n_cells_uniform;
  }
};

// Axis assignment for one phase of the algorithm. Operations are written for
// a logical frame whose vertical axis is z; the planar phase maps the real
// layer z = 0 onto the logical plane y = 0 with real y as logical height.
struct Frame {
  std::array<int, 3> axes{0, 1, 2};
  bool planar{false};

  Cell to_logical(Cell r) const { return {r[axes[0]], r[axes[1]], r[axes[2]]}; }
  Cell to_real(Cell l) const {
    Cell r;
    r[axes[0]] = l.x;
    r[axes[1]] = l.y;
    r[axes[2]] = l.z;
    return r;
  }
  Move to_real(const Move& m) const { return {m.kind, to_real(m.from), to_real(m.to)}; }
  Move to_logical(const Move& m) const { return {m.kind, to_logical(m.from), to_logical(m.to)}; }

  bool in_domain(Cell logical) const { return !planar || logical.y == 0; }
  // Cells a plan may pass through: the planar phase may step one layer up.
  bool near_domain(Cell logical) const { return !planar || logical.y == 0 || logical.y == 1; }

  std::span<const std::pair<int, int>> sides() const {
    static constexpr std::array<std::pair<int, int>, 2> kPlanarSides{{{1, 0}, {-1, 0}}};
    if (planar) return kPlanarSides;
    return kSides;
  }

  Configuration to_logical(const Configuration& real) const {
    Configuration out;
    for (Cell c : real) out.insert(to_logical(c));
    return out;
  }

  // Potential the real configuration would have; this is what the ledger tracks.
  template <typename Range>
  Potential real_potential(const Range& logical_cubes) const {
    Potential sum = 0;
    for (Cell c : logical_cubes) sum += cube_potential(to_real(c));
    return sum;
  }
};

inline constexpr Frame kSpatialFrame{{0, 1, 2}, false};
inline constexpr Frame kPlanarFrame{{0, 2, 1}, true};

inline OpLabel framed(OpLabel spatial, const Frame& f) {
  if (!f.planar || static_cast<int>(spatial) > static_cast<int>(OpLabel::I)) return spatial;
  return static_cast<OpLabel>(static_cast<int>(OpLabel::PlanarA) + static_cast<int>(spatial));
}

// Replays moves on a copy; nullopt as soon as one is illegal.
inline std::optional<Configuration> replay(Configuration cfg, std::span<const Move> moves) {
  for (const Move& m : moves) {
    if (check_move(cfg, m) != MoveVerdict::Ok) return std::nullopt;
    cfg.erase(m.from);
    cfg.insert(m.to);
  }
  return cfg;
}

inline bool all_nonnegative(const Configuration& cfg) {
  for (Cell c : cfg)
    if (!is_nonnegative(c)) return false;
  return true;
}

// A candidate plan is usable iff every move is legal, the end state is
// nonnegative and the real potential strictly drops.
inline std::optional<Configuration> accept_plan(const Frame& frame, const Configuration& logical,
                                                std::span<const Move> moves) {
  if (moves.empty()) return std::nullopt;
  auto end = replay(logical, moves);
  if (!end || !all_nonnegative(*end)) return std::nullopt;
  if (frame.real_potential(*end) >= frame.real_potential(logical)) return std::nullopt;
  return end;
}

}  // namespace slidecube
