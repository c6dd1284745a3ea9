#include <iostream>
#include <string>
#include <vector>

#include "spiralcolor/harness.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spiralcolor::run_cli(args, std::cout, std::cerr);
}
