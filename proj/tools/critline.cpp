#include <iostream>

#include "critline/cli.hpp"

int main(int argc, char** argv) {
  return critline::cli::run(argc, argv, std::cout, std::cerr);
}
