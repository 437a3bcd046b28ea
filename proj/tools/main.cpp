#include <iostream>
#include <string>
#include <vector>

#include "zinbiel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zinbiel::run_cli(args, std::cout, std::cerr);
}
