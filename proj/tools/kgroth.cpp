#include <iostream>

#include "kgroth/cli.hpp"

int main(int argc, char** argv) {
  return kgroth::run_cli(argc, argv, std::cout, std::cerr);
}
