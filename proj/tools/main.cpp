#include <iostream>

#include "sqfbrace/cli.hpp"

int main(int argc, char** argv) {
  return sqfb::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
