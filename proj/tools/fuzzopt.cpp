#include <iostream>
#include <string>
#include <vector>

#include "fuzzopt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fuzzopt::cli::run(args, std::cout, std::cerr);
}
