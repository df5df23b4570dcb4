#include "eigenrec/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace eigenrec::log {

static Level parse_env() {
  const char* raw = std::getenv("EIGENREC_LOG");
  if (raw == nullptr) return Level::Warn;
  if (std::strcmp(raw, "error") == 0) return Level::Error;
  if (std::strcmp(raw, "warn") == 0) return Level::Warn;
  if (std::strcmp(raw, "info") == 0) return Level::Info;
  if (std::strcmp(raw, "debug") == 0) return Level::Debug;
  return Level::Warn;
}

Level threshold() {
  static const Level level = parse_env();
  return level;
}

bool enabled(Level level) {
  return static_cast<int>(level) <= static_cast<int>(threshold());
}

void write(Level level, const std::string& message) {
  static const char* const tags[] = {"error", "warn", "info", "debug"};
  std::fprintf(stderr, "eigenrec [%s] %s\n", tags[static_cast<int>(level)], message.c_str());
}

}  // namespace eigenrec::log
