#include <iostream>

#include "tcomb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tcomb::cli::run(args, std::cout, std::cerr);
}
