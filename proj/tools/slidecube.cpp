#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "slidecube/slidecube.hpp"

namespace sc = slidecube;

namespace {

enum Exit : int { kOk = 0, kParse = 2, kModel = 3, kStuck = 4, kVerify = 5, kCap = 6 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sc::ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

sc::Cell parse_box(const std::string& text) {
  sc::Cell box;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> box.x >> c1 >> box.y >> c2 >> box.z) || c1 != ',' || c2 != ',' || !in.eof())
    throw sc::ParseError(0, "box must look like X,Y,Z");
  if (box.x <= 0 || box.y <= 0 || box.z <= 0) throw sc::ParseError(0, "box sides must be positive");
  return box;
}

int cmd_compact(const std::string& in_path, const std::string& out_path, bool frames) {
  const auto start = sc::parse_config(read_file(in_path));
  const auto result = sc::run_compaction(start);
  const auto trace = sc::make_trace(result);
  write_file(out_path, sc::serialize_trace(trace));
  if (frames) sc::write_frames(trace, out_path + ".frames");

  const auto report = sc::oracle::verify_trace_by_definition(start, result.moves());
  if (!report.ok) {
    std::cerr << "verification failed at move " << *report.failing_index << ": " << sc::oracle::to_string(report.reason)
              << '\n';
    return kVerify;
  }
  if (!sc::is_finished(result.final_config)) {
    std::cerr << "compaction ended unfinished\n";
    return kStuck;
  }
  const auto s = sc::stats(trace);
  std::cout << "moves " << s.total_moves << "\npotential " << trace.header.initial_potential << " -> "
            << trace.footer.final_potential << "\nratio " << s.ratio << "\nmax_safety " << s.max_safety << '\n';
  return kOk;
}

int cmd_verify(const std::string& config_path, const std::string& trace_path) {
  const auto start = sc::parse_config(read_file(config_path));
  const auto trace = sc::parse_trace(read_file(trace_path), false);
  if (!(trace.initial == start)) {
    std::cerr << "verification failed at move 0: trace starts from a different configuration\n";
    return kVerify;
  }
  std::vector<sc::Move> moves;
  for (const auto& p : trace.plans) moves.insert(moves.end(), p.moves.begin(), p.moves.end());
  const auto report = sc::oracle::verify_trace_by_definition(start, moves);
  if (!report.ok) {
    std::cerr << "verification failed at move " << *report.failing_index << ": " << sc::oracle::to_string(report.reason)
              << '\n';
    return kVerify;
  }
  try {
    sc::check_trace(trace);
  } catch (const sc::ReplayMismatch& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerify;
  }
  std::cout << "ok " << moves.size() << " moves\n";
  return kOk;
}

int cmd_sweep(std::size_t n_max, const sc::Cell& box_size, bool reach, std::size_t cap) {
  const sc::BoundingBox box{{0, 0, 0}, {box_size.x - 1, box_size.y - 1, box_size.z - 1}};
  const sc::BoundingBox reach_box{{-1, -1, -1}, {box_size.x, box_size.y, box_size.z}};
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0;
  double max_safety = 0.0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::size_t count = 0;
    for (const auto& cfg : sc::oracle::enumerate_connected(n, box)) {
      ++count;
      std::string failure;
      try {
        const auto r = sc::run_compaction(cfg);
        const auto report = sc::oracle::verify_trace_by_definition(cfg, r.moves());
        if (!report.ok) failure = "verification failed";
        else if (!sc::is_finished(r.final_config)) failure = "unfinished";
        else if (r.lemmas.total() > 0) failure = "lemma check fired";
        else if (reach && !sc::oracle::bfs_reachable(cfg, reach_box, cap).count(r.final_config.sorted()))
          failure = "final configuration not reachable";
        max_safety = std::max(max_safety, r.max_safety);
      } catch (const sc::oracle::CapExceeded& e) {
        std::cerr << e.what() << '\n';
        return kCap;
      } catch (const std::exception& e) {
        failure = e.what();
      }
      if (!failure.empty()) {
        write_file("sweep_failure.txt", "# " + failure + "\n" + sc::serialize_config(cfg));
        std::cerr << "failure (" << failure << "), configuration written to sweep_failure.txt\n";
        return kStuck;
      }
    }
    std::cout << "n=" << n << " configurations " << count << " ok\n";
    total += count;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "total " << total << " max_safety " << max_safety << " seconds " << secs << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compaction of sliding-cube configurations"};
  app.require_subcommand(1);

  std::string in_path, out_path, config_path, trace_path, box_text;
  bool frames = false, reach = false;
  std::size_t n = 0, n_max = 4, cap = 200000;
  std::uint64_t seed = 0;
  int w = 0;

  auto* compact = app.add_subcommand("compact", "compact a configuration and write its trace");
  compact->add_option("--in", in_path, "configuration file")->required();
  compact->add_option("--out", out_path, "trace file")->required();
  compact->add_flag("--frames", frames, "also write one cube list per move into <out>.frames/");

  auto* verify = app.add_subcommand("verify", "check a trace move by move");
  verify->add_option("--config", config_path, "start configuration")->required();
  verify->add_option("--trace", trace_path, "trace file")->required();

  auto* gen = app.add_subcommand("gen", "write a generated configuration");
  gen->require_subcommand(1);
  gen->add_option("--out", out_path, "configuration file")->required();
  auto* random = gen->add_subcommand("random", "seeded random growth in a box");
  random->fallthrough();
  random->add_option("--n", n, "number of cubes")->required();
  random->add_option("--box", box_text, "box size X,Y,Z")->required();
  random->add_option("--seed", seed, "seed")->required();
  auto* diagonal = gen->add_subcommand("diagonal", "staircase from the origin to the far corner");
  diagonal->fallthrough();
  diagonal->add_option("--w", w, "side length")->required();

  auto* sweep = app.add_subcommand("sweep", "exhaustive check of all small configurations");
  sweep->add_option("--n-max", n_max, "largest cube count");
  sweep->add_option("--box", box_text, "box size X,Y,Z")->required();
  sweep->add_flag("--reach", reach, "also check the result against a reachability search");
  sweep->add_option("--cap", cap, "state cap of the reachability search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*compact) return cmd_compact(in_path, out_path, frames);
    if (*verify) return cmd_verify(config_path, trace_path);
    if (*gen) {
      sc::Configuration cfg;
      if (*random) {
        if (n < 2) throw sc::ParseError(0, "--n must be at least 2");
        cfg = sc::generate_random(n, parse_box(box_text), seed);
      } else {
        if (w < 2) throw sc::ParseError(0, "--w must be at least 2");
        cfg = sc::generate_diagonal(w);
      }
      write_file(out_path, sc::serialize_config(cfg));
      return kOk;
    }
    if (*sweep) return cmd_sweep(n_max, parse_box(box_text), reach, cap);
  } catch (const sc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const sc::StuckUnfinished& e) {
    std::cerr << "stuck: " << e.what() << '\n';
    return kStuck;
  } catch (const sc::ReplayMismatch& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerify;
  } catch (const sc::oracle::CapExceeded& e) {
    std::cerr << e.what() << '\n';
    return kCap;
  } catch (const sc::BoxTooSmall& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const sc::ModelError& e) {
    std::cerr << "model error: " << e.what() << '\n';
    return kModel;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kModel;
  }
  return kOk;
}
