#include <iostream>
#include <vector>

#include "chebyperm/cli.hpp"

int main(int argc, char** argv) {
  return chebyperm::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
