#include "cbred/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cbred::cli_run(args, std::cout, std::cerr);
}
