#include <iostream>
#include <string>
#include <vector>

#include "gee/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gee::cli::run(args, std::cout, std::cerr);
}
