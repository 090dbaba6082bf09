#include <iostream>

#include "clusterdyn/cli/app.hpp"

int main(int argc, char** argv) {
  return clusterdyn::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
