#include <iostream>

#include "setrep/cli.hpp"

int main(int argc, char** argv) {
  return setrep::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
