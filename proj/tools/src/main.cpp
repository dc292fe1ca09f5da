#include <iostream>

#include "zoll_cli/cli.hpp"

int main(int argc, char** argv) {
  return zoll::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
