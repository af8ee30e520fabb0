#include <iostream>
#include <string>
#include <vector>

#include "ebn_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ebn::cli::main(std::move(args), std::cout, std::cerr);
}
