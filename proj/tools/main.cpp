#include <iostream>
#include <string>
#include <vector>

#include "maass/cli.hpp"

int main(int argc, char** argv) {
  return maass::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
