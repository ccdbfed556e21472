#include <iostream>
#include <string>
#include <vector>

#include "braidinv/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return braidinv::cli::run_cli(args, std::cout, std::cerr);
}
