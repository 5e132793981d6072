#include <iostream>
#include <string>
#include <vector>

#include "qg/commands.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qg::run_command(args, std::cout, std::cerr);
}
