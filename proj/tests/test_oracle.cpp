#include <gtest/gtest.h>

#include <set>

#include "slidecube/slidecube.hpp"

using namespace slidecube;

namespace {

// Second enumerator: all n-subsets of the box filtered by connectivity.
std::size_t count_by_combinations(std::size_t n, const BoundingBox& box) {
  std::vector<Cell> cells;
  for (int x = box.min.x; x <= box.max.x; ++x)
    for (int y = box.min.y; y <= box.max.y; ++y)
      for (int z = box.min.z; z <= box.max.z; ++z) cells.push_back({x, y, z});
  std::size_t count = 0;
  const std::size_t total = cells.size();
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n) continue;
    oracle::CubeSet s;
    for (std::size_t i = 0; i < total; ++i)
      if (mask & (1u << i)) s.insert(cells[i]);
    if (oracle::connected(s)) ++count;
  }
  return count;
}

}  // namespace

TEST(Enumerate, Dominoes) {
  EXPECT_EQ(oracle::enumerate_connected(2, {{0, 0, 0}, {1, 0, 0}}).size(), 1u);
  EXPECT_EQ(oracle::enumerate_connected(2, {{0, 0, 0}, {1, 1, 0}}).size(), 4u);
}

TEST(Enumerate, AgreesWithSubsetFilter) {
  const BoundingBox cube2{{0, 0, 0}, {1, 1, 1}};
  for (std::size_t n = 1; n <= 5; ++n)
    EXPECT_EQ(oracle::enumerate_connected(n, cube2).size(), count_by_combinations(n, cube2)) << n;
  const BoundingBox slab{{0, 0, 0}, {2, 2, 1}};
  for (std::size_t n = 2; n <= 4; ++n)
    EXPECT_EQ(oracle::enumerate_connected(n, slab).size(), count_by_combinations(n, slab)) << n;
}

TEST(Enumerate, ResultsAreDistinctAndConnected) {
  const auto all = oracle::enumerate_connected(4, {{0, 0, 0}, {2, 2, 2}});
  std::set<std::vector<Cell>> distinct;
  for (const auto& c : all) {
    EXPECT_TRUE(oracle::connected(oracle::to_set(c)));
    distinct.insert(c.sorted());
  }
  EXPECT_EQ(distinct.size(), all.size());
}

TEST(Verify, AcceptsLegalSlide) {
  const Configuration cfg{{0, 0, 0}, {1, 0, 0}, {1, 0, 1}};
  const auto r = oracle::verify_trace_by_definition(cfg, {slide({1, 0, 1}, {0, 0, 1})});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.per_move_pi, (std::vector<std::int64_t>{17}));
}

TEST(Verify, TeleportHasNoWitness) {
  const Configuration cfg{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  const auto r = oracle::verify_trace_by_definition(cfg, {slide({2, 0, 0}, {2, 1, 0})});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failing_index, 0u);
  EXPECT_EQ(r.reason, oracle::Reason::NoWitnessCycle);
}

TEST(Verify, CutCubeDisconnects) {
  const Configuration cfg{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}};
  const auto r = oracle::verify_trace_by_definition(cfg, {slide({1, 0, 0}, {1, 1, 0})});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.reason, oracle::Reason::Disconnects);
}

TEST(Verify, ReportsFirstFailure) {
  const Configuration cfg{{0, 0, 0}, {1, 0, 0}, {1, 0, 1}};
  const std::vector<Move> moves{slide({1, 0, 1}, {0, 0, 1}), slide({5, 5, 5}, {5, 5, 6})};
  const auto r = oracle::verify_trace_by_definition(cfg, moves);
  EXPECT_EQ(r.failing_index, 1u);
  EXPECT_EQ(r.reason, oracle::Reason::SourceEmpty);
}

TEST(Verify, OccupiedDestination) {
  const Configuration cfg{{0, 0, 0}, {1, 0, 0}};
  const auto r = oracle::verify_trace_by_definition(cfg, {slide({1, 0, 0}, {0, 0, 0})});
  EXPECT_EQ(r.reason, oracle::Reason::DestinationOccupied);
}

TEST(Witness, ConvexNeedsExactlyOneIntermediate) {
  oracle::CubeSet s{{0, 0, 0}, {1, 0, 0}};
  EXPECT_TRUE(oracle::witnessed(s, {1, 0, 0}, {0, 0, 1}, MoveKind::ConvexTransition));
  s.insert({1, 0, 1});
  EXPECT_FALSE(oracle::witnessed(s, {1, 0, 0}, {0, 0, 1}, MoveKind::ConvexTransition));
}

TEST(Witness, SquaresThroughCell) {
  const auto squares = oracle::squares_through({0, 0, 0});
  EXPECT_EQ(squares.size(), 12u);
  for (const auto& sq : squares) EXPECT_EQ(std::count(sq.begin(), sq.end(), Cell{0, 0, 0}), 1);
}

TEST(Reach, DominoInLine) {
  const auto r = oracle::bfs_reachable(Configuration{{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {1, 0, 0}}, 100);
  EXPECT_EQ(r.size(), 1u);
}

TEST(Reach, DominoInSquare) {
  // Each domino can rotate about either cube, so all four placements connect.
  const auto r = oracle::bfs_reachable(Configuration{{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {1, 1, 0}}, 100);
  EXPECT_EQ(r.size(), 4u);
}

TEST(Reach, CapIsEnforced) {
  EXPECT_THROW(oracle::bfs_reachable(Configuration{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, {{0, 0, 0}, {2, 2, 2}}, 5),
               oracle::CapExceeded);
}
