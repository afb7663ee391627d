#include <iostream>
#include <string>
#include <vector>

#include "zm/cli.hpp"

int main(int argc, char** argv) {
  return zm::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
