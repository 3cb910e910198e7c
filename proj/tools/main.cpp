#include <iostream>
#include <string>
#include <vector>

#include "hrrc/cli.hpp"

int main(int argc, char** argv) {
  return hrrc::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
