#include <iostream>
#include <string>
#include <vector>

#include "poincare/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return poincare::cli::run(std::move(args), std::cout, std::cerr);
}
