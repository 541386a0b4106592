#include <iostream>
#include <vector>

#include "fris/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fris::cli::run(args, std::cout, std::cerr);
}
