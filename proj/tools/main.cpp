#include <iostream>

#include "raag/cli.hpp"

int main(int argc, char** argv) {
  return raag::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
