#include <iostream>

#include "bdsweyl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bdsweyl::run(args, std::cout, std::cerr);
}
