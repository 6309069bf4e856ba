#include <iostream>

#include "polyadic_cli/cli.hpp"

int main(int argc, char** argv) {
  return polyadic::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
