#include <iostream>

#include "tilemealy/cli.hpp"

int main(int argc, char** argv) {
  return tilemealy::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
