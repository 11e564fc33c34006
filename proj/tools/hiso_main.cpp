#include <iostream>
#include <string>
#include <vector>

#include "hiso/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hiso::run_command(args, std::cout, std::cerr);
}
