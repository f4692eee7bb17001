#include <iostream>
#include <string>
#include <vector>

#include "jumploci/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jumploci::run_cli(args, std::cout, std::cerr);
}
