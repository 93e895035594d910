#include <iostream>

#include "nsarith/cli.hpp"

int main(int argc, char** argv) {
  return nsarith::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
