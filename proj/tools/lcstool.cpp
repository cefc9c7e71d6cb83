#include <iostream>
#include <string>
#include <vector>

#include "lcs/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcs::run_cli(args, std::cout, std::cerr);
}
