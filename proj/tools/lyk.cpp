#include <iostream>

#include "lyk/io/cli.hpp"

int main(int argc, char** argv) {
  return lyk::io::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
