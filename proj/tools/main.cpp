// colmon - collision-table monoids and their subshifts

#include <iostream>

#include "colmon/cli.hpp"

int main(int argc, char** argv) {
  return colmon::cli::run(
      std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
