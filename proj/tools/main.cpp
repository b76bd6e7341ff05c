#include <iostream>
#include <string>
#include <vector>

#include "seedstop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seedstop::cli::run(args, std::cout, std::cerr);
}
