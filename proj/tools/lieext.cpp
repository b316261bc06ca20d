#include <iostream>

#include "lieext_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lieext::cli::run(args, std::cout, std::cerr);
}
