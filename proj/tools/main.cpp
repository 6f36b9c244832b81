#include <iostream>

#include "toricsys/cli.hpp"

int main(int argc, char** argv) {
  return toricsys::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
