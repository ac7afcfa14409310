#include <iostream>

#include "permgauge/cli/run.hpp"

int main(int argc, char** argv) {
  return permgauge::cli::run(argc, argv, std::cout, std::cerr);
}
