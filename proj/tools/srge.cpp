#include <iostream>
#include <string>
#include <vector>

#include "srge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return srge::run_cli(args, std::cout, std::cerr);
}
