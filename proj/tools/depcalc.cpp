#include <iostream>

#include "depcalc/cli.hpp"

int main(int argc, char** argv) {
  return depcalc::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
