#include <iostream>

#include "linespace/cli.hpp"

int main(int argc, char** argv) {
  return linespace::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
