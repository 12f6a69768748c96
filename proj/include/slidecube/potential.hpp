#pragma once

#include <cstdint>

#include "configuration.hpp"

namespace slidecube {

using Potential = std::int64_t;

// Upper bound on moves per unit of potential decrease for every safe
// sequence the compactor emits. Measured on the sweep and random suites and
// frozen; the acceptance suite reports the observed maximum next to it.
inline constexpr double kSafetyFactor = 12.0;

inline int weight(Cell c) {
  if (!is_nonnegative(c)) throw ModelError("weight: negative coordinate");
  if (c.z > 1) return 5;
  if (c.z == 1) return 4;
  if (c.y > 1) return 3;
  if (c.y == 1) return 2;
  return 1;
}

inline Potential cube_potential(Cell c) {
  return static_cast<Potential>(weight(c)) * (c.x + 2 * static_cast<Potential>(c.y) + 4 * static_cast<Potential>(c.z));
}

template <typename Range>
Potential potential_of(const Range& cubes) {
  Potential sum = 0;
  for (Cell c : cubes) sum += cube_potential(c);
  return sum;
}

inline Potential config_potential(const Configuration& cfg) { return potential_of(cfg); }

struct CoordSum {
  std::int64_t x{0};
  std::int64_t y{0};
  std::int64_t z{0};
  std::int64_t total() const { return x + y + z; }
  friend bool operator==(const CoordSum&, const CoordSum&) = default;
};

template <typename Range>
CoordSum coord_sum(const Range& cubes) {
  CoordSum s;
  for (Cell c : cubes) {
    s.x += c.x;
    s.y += c.y;
    s.z += c.z;
  }
  return s;
}

struct PotentialLedger {
  Potential pi_start{0};
  Potential pi_end{0};
  std::int64_t moves{0};

  Potential decrease() const { return pi_start - pi_end; }
  double safety_factor() const {
    return decrease() > 0 ? static_cast<double>(moves) / static_cast<double>(decrease()) : 0.0;
  }
};

class SafetyError : public ModelError {
 public:
  enum class Kind { NotPotentialReducing, SafetyFactorExceeded, EmptySequence };
  SafetyError(Kind k, const std::string& what) : ModelError(what), kind(k) {}
  Kind kind;
};

inline PotentialLedger ledger_for(Potential before, Potential after, std::int64_t moves,
                                  double safety = kSafetyFactor) {
  if (moves < 1) throw SafetyError(SafetyError::Kind::EmptySequence, "a safe sequence has at least one move");
  if (after >= before)
    throw SafetyError(SafetyError::Kind::NotPotentialReducing,
                      "potential did not decrease: " + std::to_string(before) + " -> " + std::to_string(after));
  PotentialLedger ledger{before, after, moves};
  if (static_cast<double>(moves) > safety * static_cast<double>(before - after))
    throw SafetyError(SafetyError::Kind::SafetyFactorExceeded,
                      std::to_string(moves) + " moves for a potential decrease of " +
                          std::to_string(before - after));
  return ledger;
}

inline PotentialLedger assert_safe(const Configuration& before, const Configuration& after,
                                   std::int64_t moves, double safety = kSafetyFactor) {
  return ledger_for(config_potential(before), config_potential(after), moves, safety);
}

}  // namespace slidecube
