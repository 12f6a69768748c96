#pragma once

#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace slidecube {

using LogLevel = spdlog::level::level_enum;

// Stderr logger whose level comes from SLIDECUBE_LOG (trace, debug, info,
// warn, error, critical, off); warn when unset.
inline spdlog::logger& logger() {
  static const std::shared_ptr<spdlog::logger> instance = [] {
    auto l = std::make_shared<spdlog::logger>("slidecube", std::make_shared<spdlog::sinks::stderr_sink_mt>());
    l->set_pattern("[%n %l] %v");
    const char* raw = std::getenv("SLIDECUBE_LOG");
    l->set_level(raw ? spdlog::level::from_str(raw) : spdlog::level::warn);
    return l;
  }();
  return *instance;
}

// Arguments are streamed, so anything with operator<< can be logged.
template <typename... Args>
void log(LogLevel level, const Args&... args) {
  if (!logger().should_log(level)) return;
  std::ostringstream os;
  (os << ... << args);
  logger().log(level, os.str());
}

}  // namespace slidecube
