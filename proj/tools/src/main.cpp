#include <iostream>

#include "hc3/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hc3::cli::run(args, std::cout, std::cerr);
}
