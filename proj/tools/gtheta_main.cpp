#include <iostream>

#include "gtheta/cli.hpp"

int main(int argc, char** argv) {
  return gtheta::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
