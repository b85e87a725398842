#include <iostream>
#include <string>
#include <vector>

#include "qav/cli_driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qav::runCli(args, std::cout, std::cerr);
}
