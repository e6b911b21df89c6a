#include <iostream>

#include "lefschetz/cli.hpp"

int main(int argc, char** argv) {
  return lefschetz::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
