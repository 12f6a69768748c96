#include <gtest/gtest.h>

#include "slidecube/slidecube.hpp"

using namespace slidecube;

TEST(Weight, Tiers) {
  EXPECT_EQ(weight({7, 7, 2}), 5);
  EXPECT_EQ(weight({3, 0, 1}), 4);
  EXPECT_EQ(weight({0, 5, 0}), 3);
  EXPECT_EQ(weight({4, 1, 0}), 2);
  EXPECT_EQ(weight({0, 0, 0}), 1);
  EXPECT_THROW(weight({0, 0, -1}), ModelError);
}

TEST(Weight, MonotoneAlongTiers) {
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      for (int z = 0; z < 4; ++z) EXPECT_LE(weight({x, y, z}), weight({x, y, z + 1}));
      EXPECT_LE(weight({x, y, 0}), weight({x, y + 1, 0}));
    }
}

TEST(CubePotential, HandEvaluations) {
  EXPECT_EQ(cube_potential({0, 0, 0}), 0);
  EXPECT_EQ(cube_potential({1, 2, 3}), 85);
  EXPECT_EQ(cube_potential({0, 1, 0}), 4);
}

TEST(ConfigPotential, Domino) { EXPECT_EQ(config_potential(Configuration{{0, 0, 0}, {1, 0, 0}}), 1); }

TEST(ConfigPotential, MinimalReachableStatesAreFinished) {
  const BoundingBox box{{-1, -1, -1}, {2, 2, 2}};
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& cfg : oracle::enumerate_connected(n, {{0, 0, 0}, {1, 1, 1}})) {
      std::vector<Configuration> states;
      for (const auto& state : oracle::bfs_reachable(cfg, box, 100000)) {
        Configuration s{std::span<const Cell>(state)};
        if (all_nonnegative(s)) states.push_back(std::move(s));
      }
      Potential best = config_potential(states.front());
      for (const auto& s : states) best = std::min(best, config_potential(s));
      for (const auto& s : states)
        if (config_potential(s) == best) EXPECT_TRUE(is_finished(s));
    }
  }
}

TEST(CoordSum, Sums) {
  const auto a = coord_sum(Configuration{{0, 0, 0}, {1, 0, 0}});
  EXPECT_EQ(a.x, 1);
  EXPECT_EQ(a.y, 0);
  EXPECT_EQ(a.z, 0);
  const auto b = coord_sum(Configuration{{1, 2, 3}, {0, 0, 0}});
  EXPECT_EQ(b.x, 1);
  EXPECT_EQ(b.y, 2);
  EXPECT_EQ(b.z, 3);
  EXPECT_EQ(b.total(), 6);
}

TEST(CoordSum, AdditiveOverDisjointUnion) {
  const Configuration a{{0, 0, 0}, {4, 1, 2}};
  const Configuration b{{3, 3, 3}, {1, 0, 5}};
  Configuration u = a;
  for (Cell c : b) u.insert(c);
  EXPECT_EQ(coord_sum(u).total(), coord_sum(a).total() + coord_sum(b).total());
}

TEST(Ledger, OneMoveOneUnit) {
  const auto ledger = ledger_for(85, 84, 1);
  EXPECT_EQ(ledger.decrease(), 1);
  EXPECT_DOUBLE_EQ(ledger.safety_factor(), 1.0);
}

TEST(Ledger, GreedySlideIsSafe) {
  const Configuration before{{0, 0, 0}, {1, 0, 0}, {1, 0, 1}};
  const Configuration after = apply_move(before, slide({1, 0, 1}, {0, 0, 1}));
  const auto ledger = assert_safe(before, after, 1);
  EXPECT_EQ(ledger.pi_start, 21);
  EXPECT_EQ(ledger.pi_end, 17);
}

TEST(Ledger, Errors) {
  try {
    ledger_for(10, 9, 0);
    FAIL();
  } catch (const SafetyError& e) {
    EXPECT_EQ(e.kind, SafetyError::Kind::EmptySequence);
  }
  try {
    ledger_for(10, 10, 1);
    FAIL();
  } catch (const SafetyError& e) {
    EXPECT_EQ(e.kind, SafetyError::Kind::NotPotentialReducing);
  }
  try {
    ledger_for(10, 9, 1000);
    FAIL();
  } catch (const SafetyError& e) {
    EXPECT_EQ(e.kind, SafetyError::Kind::SafetyFactorExceeded);
  }
}

TEST(Greedy, SameTierDecreaseLowersPotential) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto cfg = generate_random(4 + seed % 15, {4, 4, 4}, seed);
    for (const Move& m : legal_moves(cfg)) {
      if (!is_nonnegative(m.to) || weight(m.to) != weight(m.from)) continue;
      const int before = m.from.x + 2 * m.from.y + 4 * m.from.z;
      const int after = m.to.x + 2 * m.to.y + 4 * m.to.z;
      if (after < before) EXPECT_LT(config_potential(apply_move(cfg, m)), config_potential(cfg));
    }
  }
}
