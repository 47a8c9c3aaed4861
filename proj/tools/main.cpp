#include <iostream>
#include <string>
#include <vector>

#include "knotlike/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knotlike::run(args, std::cout, std::cerr);
}
