#include <gtest/gtest.h>

#include <filesystem>

#include "slidecube/slidecube.hpp"

using namespace slidecube;

namespace {

TraceFile sample_trace() {
  return make_trace(run_compaction(generate_random(12, {5, 5, 5}, 7)));
}

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_trace(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST(ConfigIo, RoundTrip) {
  const Configuration cfg = generate_random(20, {6, 6, 6}, 3);
  EXPECT_EQ(parse_config(serialize_config(cfg)), cfg);
}

TEST(ConfigIo, CommentsAndBlankLines) {
  const auto cfg = parse_config("slidecube/1 config\n# two cubes\n0 0 0\n\n1 0 0  # east\n");
  EXPECT_EQ(cfg, (Configuration{{0, 0, 0}, {1, 0, 0}}));
}

TEST(ConfigIo, Rejections) {
  EXPECT_THROW(parse_config("slidecube/1 config\n0 0 0\n2 0 0\n"), ConnectivityError);
  EXPECT_THROW(parse_config("slidecube/1 config\n0 0 0\n0 0 0\n1 0 0\n"), ParseError);
  EXPECT_THROW(parse_config("slidecube/1 config\n0 0 0\n"), ParseError);
  EXPECT_THROW(parse_config("slidecube/1 config\n0 0 -1\n0 0 0\n"), ModelError);
  EXPECT_THROW(parse_config("slidecube/2 config\n0 0 0\n1 0 0\n"), ParseError);
  EXPECT_THROW(parse_config("slidecube/1 config\n0 0\n1 0 0\n"), ParseError);
}

TEST(MoveIo, RoundTrip) {
  for (const Move& m : {slide({1, 0, 1}, {0, 0, 1}), convex({0, 0, 2}, {1, 0, 1})})
    EXPECT_EQ(parse_move(to_string(m)), m);
  EXPECT_THROW(parse_move("hop 0 0 0 -> 1 0 0"), ParseError);
  EXPECT_THROW(parse_move("slide 0 0 0 1 0 0"), ParseError);
}

TEST(TraceIo, RoundTripIsByteExact) {
  const TraceFile t = sample_trace();
  const std::string text = serialize_trace(t);
  const TraceFile back = parse_trace(text);
  EXPECT_EQ(serialize_trace(back), text);
  EXPECT_EQ(back.plans, t.plans);
  EXPECT_TRUE(back.footer == t.footer);
}

TEST(TraceIo, ReplayReproducesFooter) {
  const auto r = run_compaction(generate_random(15, {5, 5, 5}, 11));
  const TraceFile t = make_trace(r);
  EXPECT_EQ(final_configuration(t), r.final_config);
  EXPECT_EQ(t.footer.total_moves, r.total_moves);
  EXPECT_EQ(t.footer.final_potential, config_potential(r.final_config));
}

TEST(TraceIo, TamperedFooterIsRejected) {
  std::string text = serialize_trace(sample_trace());
  const auto at = text.find("total_moves ");
  text.replace(at, text.find('\n', at) - at, "total_moves 999999");
  EXPECT_THROW(parse_trace(text), ReplayMismatch);
  EXPECT_NO_THROW(parse_trace(text, false));
}

TEST(TraceIo, IllegalMoveIsRejected) {
  const Configuration cfg{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
  TraceFile t = make_trace(cfg, {});
  t.plans.push_back({OpLabel::F, {slide({2, 0, 0}, {2, 1, 0})}});
  EXPECT_THROW(parse_trace(serialize_trace(t)), ReplayMismatch);
}

TEST(TraceIo, ParseErrorCarriesLine) {
  const std::string good = serialize_trace(sample_trace());
  std::string bad = good;
  const auto at = bad.find("plans ");
  bad.replace(at, 5, "plons");
  const auto expected_line = static_cast<std::size_t>(std::count(good.begin(), good.begin() + at, '\n')) + 1;
  EXPECT_EQ(parse_error_line(bad), expected_line);
  EXPECT_EQ(parse_error_line("slidecube/1 trace\ncubes two\n"), 2u);
  EXPECT_GT(parse_error_line(good + "extra\n"), 0u);
}

TEST(Generators, Diagonal) {
  const auto d2 = generate_diagonal(2);
  EXPECT_EQ(d2.size(), 4u);
  EXPECT_TRUE(d2.contains({1, 1, 1}));
  EXPECT_EQ(generate_diagonal(4).size(), 10u);
  EXPECT_TRUE(is_connected(generate_diagonal(7)));
  EXPECT_THROW(generate_diagonal(1), ModelError);
}

TEST(Generators, RandomIsSeededAndBounded) {
  const auto a = generate_random(30, {4, 5, 6}, 42);
  EXPECT_EQ(a, generate_random(30, {4, 5, 6}, 42));
  EXPECT_EQ(a.size(), 30u);
  EXPECT_TRUE(is_connected(a));
  for (Cell c : a) {
    EXPECT_TRUE(c.x >= 0 && c.x < 4 && c.y >= 0 && c.y < 5 && c.z >= 0 && c.z < 6);
  }
  EXPECT_THROW(generate_random(9, {2, 2, 2}, 1), BoxTooSmall);
  EXPECT_EQ(generate_random(8, {2, 2, 2}, 1).size(), 8u);
}

TEST(Stats, MatchesTrace) {
  const TraceFile t = sample_trace();
  const TraceStats s = stats(t);
  EXPECT_EQ(s.total_moves, t.footer.total_moves);
  std::int64_t by_label = 0;
  for (const auto& [label, n] : s.moves_by_label) by_label += n;
  EXPECT_EQ(by_label, s.total_moves);
  ASSERT_EQ(s.pi_profile.size(), t.plans.size() + 1);
  for (std::size_t i = 1; i < s.pi_profile.size(); ++i) EXPECT_LT(s.pi_profile[i], s.pi_profile[i - 1]);
  EXPECT_DOUBLE_EQ(s.max_safety, t.footer.max_safety.value());
}

TEST(Frames, OnePerState) {
  const TraceFile t = sample_trace();
  const auto dir = std::filesystem::temp_directory_path() / "slidecube_frames_test";
  std::filesystem::remove_all(dir);
  const std::size_t n = write_frames(t, dir);
  EXPECT_EQ(n, static_cast<std::size_t>(t.footer.total_moves) + 1);
  std::ifstream last(dir / ("frame_" + std::string(6 - std::to_string(n - 1).size(), '0') + std::to_string(n - 1) + ".txt"));
  std::stringstream buf;
  buf << last.rdbuf();
  EXPECT_EQ(parse_config(buf.str()), final_configuration(t));
  std::filesystem::remove_all(dir);
}
