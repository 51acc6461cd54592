#include <iostream>
#include <string>
#include <vector>

#include "clpa/cli_io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return clpa::run(args, std::cout, std::cerr);
}
