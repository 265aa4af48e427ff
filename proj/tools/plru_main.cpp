#include <iostream>
#include <string>
#include <vector>

#include "plru/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return plru::cli::run_command(args, std::cout, std::cerr);
}
