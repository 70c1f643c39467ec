#include <iostream>
#include <string>
#include <vector>

#include "branecharge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return branecharge::cli::run(args, std::cout, std::cerr);
}
