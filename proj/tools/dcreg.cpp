#include <iostream>

#include "dcreg/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dcreg::cli::run_cli(args, std::cout, std::cerr);
}
