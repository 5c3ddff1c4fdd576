#include <iostream>
#include <string>
#include <vector>

#include "occat/cli.hpp"

int main(int argc, char** argv) {
  return occat::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
