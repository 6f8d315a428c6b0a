#include "gee/log.hpp"

#include <atomic>
#include <iostream>

namespace gee::log {

namespace {
std::atomic<level> current{level::warn};
}

void set_level(level l) { current.store(l, std::memory_order_relaxed); }
level get_level() { return current.load(std::memory_order_relaxed); }

void warn(std::string_view msg) {
  if (get_level() <= level::warn) std::cerr << "[gee] warning: " << msg << '\n';
}

void info(std::string_view msg) {
  if (get_level() <= level::info) std::cerr << "[gee] " << msg << '\n';
}

}  // namespace gee::log
