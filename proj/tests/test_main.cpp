#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "gee/log.hpp"

int main(int argc, char** argv) {
  // Random label vectors routinely leave classes empty.
  gee::log::set_level(gee::log::level::error);
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
