#include <gtest/gtest.h>

#include "slidecube/slidecube.hpp"

using namespace slidecube;

namespace {

std::size_t edge_count(const PillarGraph& g) {
  std::size_t twice = 0;
  for (const auto& adj : g.edges) twice += adj.size();
  return twice / 2;
}

}  // namespace

TEST(DecomposePillars, GapSplitsColumn) {
  const auto pillars = decompose_pillars(std::vector<Cell>{{0, 0, 0}, {0, 0, 1}, {0, 0, 3}});
  ASSERT_EQ(pillars.size(), 2u);
  EXPECT_EQ(pillars[0], (Subpillar{0, 0, 0, 1}));
  EXPECT_EQ(pillars[1], (Subpillar{0, 0, 3, 3}));
}

TEST(DecomposePillars, DominoIsTwoPillars) {
  const auto pillars = decompose_pillars(std::vector<Cell>{{0, 0, 0}, {1, 0, 0}});
  ASSERT_EQ(pillars.size(), 2u);
  EXPECT_EQ(pillars[0].height(), 1);
  EXPECT_EQ(pillars[1].height(), 1);
}

TEST(DecomposePillars, PartitionOfRandomSets) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto cfg = generate_random(5 + seed % 30, {5, 5, 5}, seed);
    CellSet covered;
    for (const Subpillar& p : decompose_pillars(cfg)) {
      EXPECT_TRUE(is_pillar_of(cfg, p));
      for (Cell c : p.cells()) EXPECT_TRUE(covered.insert(c).second);
    }
    EXPECT_EQ(covered.size(), cfg.size());
  }
}

TEST(PillarGraph, Domino) {
  const auto g = pillar_graph(std::vector<Cell>{{0, 0, 0}, {1, 0, 0}});
  EXPECT_EQ(g.vertices.size(), 2u);
  EXPECT_EQ(edge_count(g), 1u);
}

TEST(PillarGraph, SinglePillar) {
  const auto g = pillar_graph(std::vector<Cell>{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}});
  EXPECT_EQ(g.vertices.size(), 1u);
  EXPECT_EQ(edge_count(g), 0u);
}

TEST(PillarGraph, PlateWithTwoTowers) {
  // Plate (0..3,0,0); towers stand on (0,0,0) and (3,0,0) one column over.
  const std::vector<Cell> cells{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {0, 1, 0}, {0, 1, 1}};
  const auto g = pillar_graph(cells);
  const int tower = g.index_of({0, 1, 0, 1});
  ASSERT_GE(tower, 0);
  ASSERT_EQ(g.edges[tower].size(), 1u);
  EXPECT_EQ(g.vertices[g.edges[tower][0]], (Subpillar{0, 0, 0, 0}));
}

TEST(PillarGraph, ConnectedIffConfigurationConnected) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto cfg = generate_random(6 + seed % 20, {5, 5, 5}, seed);
    const auto g = pillar_graph(cfg);
    std::vector<char> seen(g.vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.edges[v])
        if (!seen[w]) seen[w] = 1, stack.push_back(w);
    }
    EXPECT_EQ(std::count(seen.begin(), seen.end(), 1), static_cast<long>(g.vertices.size()));
  }
}

TEST(NonCutPillar, PathMiddleIsCut) {
  Configuration path{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  EXPECT_FALSE(is_non_cut_pillar(path, {1, 0, 0, 0}));
  EXPECT_TRUE(is_non_cut_pillar(path, {0, 0, 0, 0}));
}

TEST(NonCutPillar, RejectsNonPillars) {
  Configuration tower{{0, 0, 0}, {0, 0, 1}, {1, 0, 0}};
  EXPECT_THROW(is_non_cut_pillar(tower, {0, 0, 1, 1}), ModelError);
}

TEST(NonCutPillar, BothCharacterizationsAgree) {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto cfg = generate_random(2 + seed % 30, {6, 6, 6}, seed);
    for (const Subpillar& p : decompose_pillars(cfg)) {
      // Ground truth from the definition-level connectivity test.
      auto rest = oracle::to_set(cfg);
      for (Cell c : p.cells()) rest.erase(c);
      const bool expected = oracle::connected(rest);
      ASSERT_EQ(is_non_cut_pillar_by_removal(cfg, p), expected) << "seed " << seed;
      ASSERT_EQ(is_non_cut_pillar_by_graph(cfg, p), expected) << "seed " << seed;
    }
  }
}

TEST(Locked, TowerWithFootIsLocked) {
  Configuration cfg{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {1, 0, 0}};
  EXPECT_TRUE(is_locked(cfg, {0, 0, 0, 2}));
  cfg.insert({1, 0, 2});
  cfg.insert({1, 0, 1});
  EXPECT_FALSE(is_locked(cfg, {0, 0, 0, 2}));
}

TEST(Locked, HeightOneIsNeverLocked) {
  Configuration cfg{{0, 0, 0}, {1, 0, 0}};
  EXPECT_FALSE(is_locked(cfg, {1, 0, 0, 0}));
  EXPECT_THROW(is_locked(cfg, {3, 0, 0, 0}), ModelError);
}

TEST(AdjacentPillars, ShortSidePillar) {
  Configuration cfg{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {1, 0, 0}};
  const auto adj = adjacent_pillars(cfg, {0, 0, 0, 2}, {1, 0});
  ASSERT_EQ(adj.size(), 1u);
  EXPECT_EQ(adj.front(), (Subpillar{1, 0, 0, 0}));
  EXPECT_TRUE(adjacent_pillars(cfg, {0, 0, 0, 2}, {-1, 0}).empty());
}

TEST(AdjacentPillars, OrderedBottomUp) {
  Configuration cfg{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 0, 4}, {1, 0, 4}, {1, 0, 5}, {1, 0, 0}, {1, 0, 2}};
  const auto adj = adjacent_pillars(cfg, {0, 0, 0, 4}, {1, 0});
  ASSERT_EQ(adj.size(), 3u);
  for (std::size_t i = 1; i < adj.size(); ++i) EXPECT_LT(adj[i - 1].z_bottom, adj[i].z_bottom);
  EXPECT_EQ(adj.back(), (Subpillar{1, 0, 4, 5}));
}
