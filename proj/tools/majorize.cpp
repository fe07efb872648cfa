#include <iostream>
#include <string>
#include <vector>

#include "majorize/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return majorize::cli::run(args, std::cout, std::cin);
}
