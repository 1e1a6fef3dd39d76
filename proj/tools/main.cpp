#include "whad/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return whad::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
