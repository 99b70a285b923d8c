#include <iostream>

#include "gis/cli.hpp"

int main(int argc, char** argv) {
  return gis::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
