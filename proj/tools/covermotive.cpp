#include <iostream>
#include <string>
#include <vector>

#include "covermotive/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return covermotive::run_cli(args, std::cout, std::cerr);
}
