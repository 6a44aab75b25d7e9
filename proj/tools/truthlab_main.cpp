#include <iostream>
#include <string>
#include <vector>

#include "truthlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return truthlab::run(args, std::cout, std::cerr);
}
