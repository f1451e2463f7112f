#include <iostream>

#include "dps_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dps::cli::run(args, std::cout, std::cerr);
}
