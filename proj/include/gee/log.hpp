#pragma once

#include <string_view>

namespace gee::log {

enum class level { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

void set_level(level l);
level get_level();

void warn(std::string_view msg);
void info(std::string_view msg);

}  // namespace gee::log
