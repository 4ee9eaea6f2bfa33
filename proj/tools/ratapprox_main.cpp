#include <iostream>
#include <string>
#include <vector>

#include "ratapprox/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ratapprox::run_cli(std::move(args), std::cout, std::cerr);
}
