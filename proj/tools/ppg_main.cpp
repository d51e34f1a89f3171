#include <iostream>
#include <string>
#include <vector>

#include "ppg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ppg::cli::run(args, std::cout, std::cerr);
}
