#include <iostream>

#include "gale/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gale::cli::run(args, std::cout, std::cerr);
}
