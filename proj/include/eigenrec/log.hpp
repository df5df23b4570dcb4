#pragma once

#include <sstream>

namespace eigenrec::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Threshold comes from EIGENREC_LOG (error|warn|info|debug), read once.
// Unset or unrecognized means warn.
Level threshold();

bool enabled(Level level);
void write(Level level, const std::string& message);

namespace detail {
inline void append(std::ostringstream&) {}
template <typename T, typename... Rest>
void append(std::ostringstream& out, const T& value, const Rest&... rest) {
  out << value;
  append(out, rest...);
}
}  // namespace detail

template <typename... Args>
void emit(Level level, const Args&... args) {
  if (!enabled(level)) return;
  std::ostringstream out;
  detail::append(out, args...);
  write(level, out.str());
}

template <typename... Args> void error(const Args&... args) { emit(Level::Error, args...); }
template <typename... Args> void warn(const Args&... args) { emit(Level::Warn, args...); }
template <typename... Args> void info(const Args&... args) { emit(Level::Info, args...); }
template <typename... Args> void debug(const Args&... args) { emit(Level::Debug, args...); }

}  // namespace eigenrec::log
