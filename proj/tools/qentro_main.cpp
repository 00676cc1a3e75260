#include <iostream>

#include "qentro/cli.hpp"

int main(int argc, char** argv) {
  return qentro::run_cli(argc, argv, std::cout, std::cerr);
}
