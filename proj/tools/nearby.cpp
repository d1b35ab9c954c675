#include <iostream>
#include <string>
#include <vector>

#include "nearby/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nearby::cli::run(args, std::cout, std::cerr);
}
