#include <iostream>
#include <string>
#include <vector>

#include "xcheck/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xcheck::cli::main_with_args(args, std::cout, std::cerr);
}
