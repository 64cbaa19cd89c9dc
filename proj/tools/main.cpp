#include <iostream>
#include <string>
#include <vector>

#include "eulerclass/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  eulerclass::CliResult r = eulerclass::run_cli(args);
  std::cout << r.out;
  if (!r.err.empty()) std::cerr << "eulerclass: " << r.err << '\n';
  return r.exit_code;
}
