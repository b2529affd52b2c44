#include <iostream>

#include "qhahn/cli.hpp"

int main(int argc, char **argv) {
  return qhahn::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
