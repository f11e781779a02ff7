#include <iostream>
#include <string>
#include <vector>

#include "tcfw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tcfw::run_cli(args, std::cout, std::cerr);
}
