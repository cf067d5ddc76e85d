#include <iostream>
#include <string>
#include <vector>

#include "orthogrid/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return orthogrid::cli::run(args, std::cout, std::cerr);
}
