#include <iostream>

#include "owf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return owf::cli::run(args, std::cout, std::cerr);
}
