#include <iostream>
#include <string>
#include <vector>

#include "polycommute/cli.hpp"

int main(int argc, char** argv) {
  return polycommute::run_cli(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
