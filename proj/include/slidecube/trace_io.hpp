#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "compactor/compactor.hpp"

namespace slidecube {

inline constexpr std::string_view kFormatVersion = "slidecube/1";

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

class ConnectivityError : public ModelError {
 public:
  using ModelError::ModelError;
};

class ReplayMismatch : public ModelError {
 public:
  using ModelError::ModelError;
};

class BoxTooSmall : public ModelError {
 public:
  using ModelError::ModelError;
};

// moves / decrease, kept exact so a replayed footer can be compared verbatim.
struct Ratio {
  std::int64_t num{0};
  std::int64_t den{1};

  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num * b.den == b.num * a.den; }
  friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
};

struct TraceHeader {
  std::size_t count{0};
  Potential initial_potential{0};
  CoordSum coord_sum;
};

struct TraceFooter {
  Potential final_potential{0};
  std::int64_t total_moves{0};
  Ratio max_safety;
  friend bool operator==(const TraceFooter&, const TraceFooter&) = default;
};

struct TracePlan {
  OpLabel label{OpLabel::A};
  std::vector<Move> moves;
  friend bool operator==(const TracePlan&, const TracePlan&) = default;
};

struct TraceFile {
  TraceHeader header;
  Configuration initial;
  std::vector<TracePlan> plans;
  TraceFooter footer;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view tok, std::size_t line) {
  Int v{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

inline Cell parse_cell(const std::vector<std::string_view>& toks, std::size_t at, std::size_t line) {
  if (toks.size() < at + 3) throw ParseError(line, "expected three coordinates");
  return {parse_int<int>(toks[at], line), parse_int<int>(toks[at + 1], line), parse_int<int>(toks[at + 2], line)};
}

// Meaningful lines with their 1-based numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t n = 0, pos = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      ++n;
      auto t = trim(text.substr(pos, nl - pos));
      if (!t.empty()) lines_.emplace_back(n, t);
      pos = nl + 1;
    }
  }
  bool done() const { return i_ >= lines_.size(); }
  std::size_t line() const { return done() ? (lines_.empty() ? 1 : lines_.back().first + 1) : lines_[i_].first; }
  std::string_view peek() const { return done() ? std::string_view{} : lines_[i_].second; }
  std::string_view next() {
    if (done()) throw ParseError(line(), "unexpected end of input");
    return lines_[i_++].second;
  }

 private:
  std::vector<std::pair<std::size_t, std::string_view>> lines_;
  std::size_t i_{0};
};

inline void expect_version(LineReader& in, std::string_view kind) {
  const std::size_t line = in.line();
  auto toks = split(in.next());
  if (toks.size() != 2 || toks[0] != kFormatVersion || toks[1] != kind)
    throw ParseError(line, "expected header '" + std::string(kFormatVersion) + " " + std::string(kind) + "'");
}

inline void write_cells(std::ostream& os, const Configuration& cfg) {
  for (Cell c : cfg.sorted()) os << c.x << ' ' << c.y << ' ' << c.z << '\n';
}

// Reads `x y z` lines up to the end or the next keyword line.
inline Configuration read_cells(LineReader& in) {
  Configuration cfg;
  std::size_t first_line = in.line();
  while (!in.done() && !std::isalpha(static_cast<unsigned char>(in.peek().front()))) {
    const std::size_t line = in.line();
    auto toks = split(in.next());
    if (toks.size() != 3) throw ParseError(line, "expected 'x y z'");
    if (!cfg.insert(parse_cell(toks, 0, line))) throw ParseError(line, "duplicate cube");
  }
  if (cfg.size() < 2) throw ParseError(first_line, "a configuration needs at least two cubes");
  if (!is_connected(cfg)) throw ConnectivityError("configuration is not connected");
  if (!all_nonnegative(cfg)) throw ModelError("configuration has negative coordinates");
  return cfg;
}

}  // namespace detail

inline std::string serialize_config(const Configuration& cfg) {
  std::ostringstream os;
  os << kFormatVersion << " config\n";
  detail::write_cells(os, cfg);
  return os.str();
}

inline Configuration parse_config(std::string_view text) {
  detail::LineReader in(text);
  detail::expect_version(in, "config");
  return detail::read_cells(in);
}

inline std::string to_string(const Move& m) {
  std::ostringstream os;
  os << (m.kind == MoveKind::Slide ? "slide" : "convex") << ' ' << m.from.x << ' ' << m.from.y << ' ' << m.from.z
     << " -> " << m.to.x << ' ' << m.to.y << ' ' << m.to.z;
  return os.str();
}

inline Move parse_move(std::string_view text, std::size_t line = 0) {
  auto toks = detail::split(text);
  if (toks.size() != 8 || toks[4] != "->") throw ParseError(line, "expected 'kind x y z -> x y z'");
  MoveKind kind;
  if (toks[0] == "slide") kind = MoveKind::Slide;
  else if (toks[0] == "convex") kind = MoveKind::ConvexTransition;
  else throw ParseError(line, "unknown move kind '" + std::string(toks[0]) + "'");
  return {kind, detail::parse_cell(toks, 1, line), detail::parse_cell(toks, 5, line)};
}

namespace detail {

struct Replayed {
  Configuration final_config;
  TraceFooter footer;
  std::vector<Potential> pi_after_plan;
};

inline Replayed replay_plans(const Configuration& initial, const std::vector<TracePlan>& plans) {
  Replayed r{initial, {config_potential(initial), 0, {}}, {}};
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const Potential before = config_potential(r.final_config);
    for (const Move& m : plans[i].moves) {
      if (check_move(r.final_config, m) != MoveVerdict::Ok)
        throw ReplayMismatch("plan " + std::to_string(i) + ": illegal move " + slidecube::to_string(m));
      r.final_config.erase(m.from);
      r.final_config.insert(m.to);
    }
    const Potential after = config_potential(r.final_config);
    const auto moves = static_cast<std::int64_t>(plans[i].moves.size());
    if (moves > 0 && before > after) {
      Ratio ratio{moves, before - after};
      if (r.footer.max_safety < ratio) r.footer.max_safety = ratio;
    }
    r.footer.total_moves += moves;
    r.pi_after_plan.push_back(after);
  }
  r.footer.final_potential = config_potential(r.final_config);
  return r;
}

}  // namespace detail

inline TraceFile make_trace(const Configuration& initial, const std::vector<TracePlan>& plans) {
  TraceFile t;
  t.initial = initial;
  t.plans = plans;
  t.header = {initial.size(), config_potential(initial), coord_sum(initial)};
  t.footer = detail::replay_plans(initial, plans).footer;
  return t;
}

inline TraceFile make_trace(const CompactionResult& r) {
  std::vector<TracePlan> plans;
  for (const auto& ap : r.plans) plans.push_back({ap.plan.label, ap.plan.moves});
  return make_trace(r.initial, plans);
}

inline std::string serialize_trace(const TraceFile& t) {
  std::ostringstream os;
  os << kFormatVersion << " trace\n";
  os << "cubes " << t.header.count << '\n';
  os << "potential " << t.header.initial_potential << '\n';
  os << "coord_sum " << t.header.coord_sum.x << ' ' << t.header.coord_sum.y << ' ' << t.header.coord_sum.z << '\n';
  os << "initial\n";
  detail::write_cells(os, t.initial);
  os << "plans " << t.plans.size() << '\n';
  for (const auto& p : t.plans) {
    os << "plan " << to_string(p.label) << ' ' << p.moves.size() << '\n';
    for (const Move& m : p.moves) os << to_string(m) << '\n';
  }
  os << "final_potential " << t.footer.final_potential << '\n';
  os << "total_moves " << t.footer.total_moves << '\n';
  os << "max_safety " << t.footer.max_safety.num << '/' << t.footer.max_safety.den << '\n';
  return os.str();
}

// Throws ReplayMismatch unless header and footer match a fresh replay.
inline void check_trace(const TraceFile& t) {
  const TraceFile expected = make_trace(t.initial, t.plans);
  if (expected.header.count != t.header.count || expected.header.initial_potential != t.header.initial_potential ||
      expected.header.coord_sum.x != t.header.coord_sum.x || expected.header.coord_sum.y != t.header.coord_sum.y ||
      expected.header.coord_sum.z != t.header.coord_sum.z)
    throw ReplayMismatch("header disagrees with the initial configuration");
  if (!(expected.footer == t.footer)) throw ReplayMismatch("footer disagrees with the replayed moves");
}

namespace detail {

inline std::vector<std::string_view> keyed(LineReader& in, std::string_view key, std::size_t arity) {
  const std::size_t line = in.line();
  auto toks = split(in.next());
  if (toks.empty() || toks[0] != key || toks.size() != arity + 1)
    throw ParseError(line, "expected '" + std::string(key) + "' with " + std::to_string(arity) + " value(s)");
  toks.erase(toks.begin());
  return toks;
}

}  // namespace detail

// Parses and, unless `replay` is false, replays; throws ReplayMismatch when the
// header or footer disagrees with the replayed moves.
inline TraceFile parse_trace(std::string_view text, bool replay = true) {
  using namespace detail;
  LineReader in(text);
  expect_version(in, "trace");
  TraceFile t;
  std::size_t line = in.line();
  t.header.count = parse_int<std::size_t>(keyed(in, "cubes", 1)[0], line);
  line = in.line();
  t.header.initial_potential = parse_int<Potential>(keyed(in, "potential", 1)[0], line);
  line = in.line();
  auto cs = keyed(in, "coord_sum", 3);
  t.header.coord_sum.x = parse_int<std::int64_t>(cs[0], line);
  t.header.coord_sum.y = parse_int<std::int64_t>(cs[1], line);
  t.header.coord_sum.z = parse_int<std::int64_t>(cs[2], line);
  keyed(in, "initial", 0);
  t.initial = read_cells(in);
  line = in.line();
  auto toks = split(in.next());
  if (toks.size() != 2 || toks[0] != "plans") throw ParseError(line, "expected 'plans <count>'");
  const auto n_plans = parse_int<std::size_t>(toks[1], line);
  for (std::size_t i = 0; i < n_plans; ++i) {
    line = in.line();
    auto head = keyed(in, "plan", 2);
    auto label = parse_op_label(head[0]);
    if (!label) throw ParseError(line, "unknown plan label '" + std::string(head[0]) + "'");
    TracePlan plan{*label, {}};
    const auto n_moves = parse_int<std::size_t>(head[1], line);
    for (std::size_t k = 0; k < n_moves; ++k) {
      line = in.line();
      plan.moves.push_back(parse_move(in.next(), line));
    }
    t.plans.push_back(std::move(plan));
  }
  line = in.line();
  t.footer.final_potential = parse_int<Potential>(keyed(in, "final_potential", 1)[0], line);
  line = in.line();
  t.footer.total_moves = parse_int<std::int64_t>(keyed(in, "total_moves", 1)[0], line);
  line = in.line();
  auto ratio = keyed(in, "max_safety", 1)[0];
  const auto slash = ratio.find('/');
  if (slash == std::string_view::npos) throw ParseError(line, "expected 'max_safety num/den'");
  t.footer.max_safety = {parse_int<std::int64_t>(ratio.substr(0, slash), line),
                         parse_int<std::int64_t>(ratio.substr(slash + 1), line)};
  if (!in.done()) throw ParseError(in.line(), "trailing content after footer");
  if (!replay) return t;

  check_trace(t);
  return t;
}

inline Configuration final_configuration(const TraceFile& t) { return detail::replay_plans(t.initial, t.plans).final_config; }

// Seeded growth from a random start cell; each step adds a uniformly chosen
// empty cell adjacent to the cluster.
inline Configuration generate_random(std::size_t n, Cell box, std::uint64_t seed) {
  if (n < 2) throw ModelError("generate_random: need at least two cubes");
  if (box.x <= 0 || box.y <= 0 || box.z <= 0 ||
      static_cast<std::uint64_t>(box.x) * box.y * box.z < n)
    throw BoxTooSmall("generate_random: box holds fewer than n cells");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  auto inside = [&box](Cell c) { return c.x >= 0 && c.y >= 0 && c.z >= 0 && c.x < box.x && c.y < box.y && c.z < box.z; };

  Configuration cfg;
  std::vector<Cell> frontier;
  std::set<Cell> in_frontier;
  auto add = [&](Cell c) {
    cfg.insert(c);
    for (Cell d : kFaceDirections) {
      Cell nb = c + d;
      if (inside(nb) && !cfg.contains(nb) && in_frontier.insert(nb).second) frontier.push_back(nb);
    }
  };
  add({static_cast<int>(pick(box.x)), static_cast<int>(pick(box.y)), static_cast<int>(pick(box.z))});
  while (cfg.size() < n) {
    const std::size_t i = pick(frontier.size());
    const Cell c = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    in_frontier.erase(c);
    add(c);
  }
  return cfg;
}

// Staircase path from the origin to (w-1, w-1, w-1), stepping x, then y, then z.
inline Configuration generate_diagonal(int w) {
  if (w < 2) throw ModelError("generate_diagonal: w must be at least 2");
  Configuration cfg{{0, 0, 0}};
  Cell c{0, 0, 0};
  for (int i = 1; i < w; ++i) {
    for (int axis = 0; axis < 3; ++axis) {
      c[axis] += 1;
      cfg.insert(c);
    }
  }
  return cfg;
}

struct TraceStats {
  std::int64_t total_moves{0};
  std::map<OpLabel, std::int64_t> moves_by_label;
  std::vector<Potential> pi_profile;
  double ratio{0.0};
  double max_safety{0.0};
};

inline TraceStats stats(const TraceFile& t) {
  const auto replayed = detail::replay_plans(t.initial, t.plans);
  TraceStats s;
  s.total_moves = replayed.footer.total_moves;
  for (const auto& p : t.plans) s.moves_by_label[p.label] += static_cast<std::int64_t>(p.moves.size());
  s.pi_profile.push_back(t.header.initial_potential);
  s.pi_profile.insert(s.pi_profile.end(), replayed.pi_after_plan.begin(), replayed.pi_after_plan.end());
  const auto sum = coord_sum(t.initial).total();
  s.ratio = sum > 0 ? static_cast<double>(s.total_moves) / static_cast<double>(sum) : 0.0;
  s.max_safety = replayed.footer.max_safety.value();
  return s;
}

// One file per state: frame_000000.txt is the initial configuration, then one
// per applied move.
inline std::size_t write_frames(const TraceFile& t, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  Configuration cfg = t.initial;
  std::size_t index = 0;
  auto emit = [&] {
    std::ostringstream name;
    name << "frame_" << std::setw(6) << std::setfill('0') << index++ << ".txt";
    std::ofstream out(dir / name.str());
    out << serialize_config(cfg);
  };
  emit();
  for (const auto& p : t.plans)
    for (const Move& m : p.moves) {
      apply_move_in_place(cfg, m);
      emit();
    }
  return index;
}

}  // namespace slidecube
